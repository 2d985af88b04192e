"""
Command-line tour
=================

Runs each subcommand of the ``xyzness`` CLI on the bundled configurations
in ``demos/configs`` and writes the records to a temporary directory.
The same calls work from a shell, e.g.
``xyzness scan --params demos/configs/scan_n7_b.json --grid 0.01:0.49:25``.
"""

import json
import tempfile
from pathlib import Path

from xyzness.cli import main

configs = Path(__file__).parent / "configs"
out = Path(tempfile.mkdtemp(prefix="xyzness-"))

runs = [
    ["verify", "--params", str(configs / "generic_n3.json")],
    ["ness", "--params", str(configs / "helix_n7.json"), "--engine", "mpa"],
    ["profile", "--params", str(configs / "helix_n7.json"), "--parity", "both"],
    ["scan", "--params", str(configs / "scan_n7_b.json"), "--grid", "0.01:0.49:13", "--oracle-every", "4"],
    ["periodic", "--params", str(configs / "periodic_m4.json")],
]
for argv in runs:
    stem = out / argv[0]
    code = main(argv + ["--out", str(stem)])
    print(f"xyzness {' '.join(argv[:1] + argv[3:])}: exit code {code}")

rec = json.loads((out / "scan.json").read_text())
print("scan record keys:", sorted(rec))
print((out / "scan.csv").read_text().splitlines()[0])
print((out / "profile.csv").read_text().splitlines()[:3])

# A malformed file is a configuration error (exit code 2); a missing file is I/O (3).
bad = out / "bad.json"
bad.write_text('{"u": 1}')
print("missing tau  ->", main(["verify", "--params", str(bad)]))
print("missing file ->", main(["verify", "--params", str(out / "nope.json")]))
