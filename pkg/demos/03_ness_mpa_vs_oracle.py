"""
Steady state: matrix product ansatz against brute force
=======================================================

The exact ansatz is contracted into a dense density matrix and compared
with the fixed point of the simulated circuit, in both regimes.
"""

import time

import numpy as np

from xyzness import ModelParams, contract_ness, find_ness, trace_distance
from xyzness.mpa import Parity, boundary_residuals, left_vector, right_vector, schmidt_values, verify_rll

tau = 0.65j
aL = 0.165 + 0.13j
points = {
    "case B": ModelParams(0.185j, 0.3, tau, aL, aL + 0.235j + 0.05, 5, "B"),
    "case A": ModelParams(0.185, 0.1j, tau, aL, 0.3 + 0.2j, 5, "A"),
}
for name, p in points.items():
    print(f"--- {name}, N = {p.N}")
    print("  RLL residual       ", f"{verify_rll(p)['max']:.1e}")
    print("  boundary residuals ", {k: f"{v:.1e}" for k, v in boundary_residuals(p).items()})
    print("  Schmidt values <L| ", np.round(schmidt_values(left_vector(p)), 6))
    print("  |R> support size   ", len(right_vector(p).support))
    t0 = time.perf_counter()
    mpa = contract_ness(p).rho
    t1 = time.perf_counter()
    res = find_ness(p, odd=True)
    t2 = time.perf_counter()
    print(f"  MPA {t1 - t0:.2f} s, oracle {t2 - t1:.2f} s ({res.iterations} polishing periods)")
    print(f"  trace distance rho_inf : {trace_distance(mpa, res.rho):.1e}")
    odd = contract_ness(p, Parity.ODD_TOP).rho
    print(f"  trace distance rho'_inf: {trace_distance(odd, res.rho_odd):.1e}")
    print(f"  purity {np.trace(mpa @ mpa).real:.6f}")
