"""
Anisotropy scan at fixed resets
===============================

With the resets held at alpha_R = alpha_L + u the chain is a pure helix
only where eta(N + 1) closes up.  Scanning eta for N = 7 shows the purity
deficit f1 and the distance f2 to the helix target dropping to zero at
eta = 1/4, with a shallower dip at eta = 1/3 from the one-kink descendant.
"""

import os
import time

import numpy as np

from xyzness import ModelParams, eta_scan

tau = 0.65j
aL = 0.165 + 0.13j
u = 0.185j
p = ModelParams(u, 0.3, tau, aL, aL + u, 7, "B")

etas = [k / 120 for k in range(1, 60)]
os.environ.setdefault("XYZNESS_THREADS", "4")
t0 = time.perf_counter()
# Every 10th point is cross-checked against the dense circuit.
out = eta_scan(p, etas, oracle_every=10)
print(f"{len(out)} points in {time.perf_counter() - t0:.1f} s")

f1 = np.array([s.f1 for s in out])
f2 = np.array([s.f2_plus for s in out])
checks = [s.oracle_distance for s in out if s.oracle_distance is not None]
print(f"max oracle distance on {len(checks)} checked points: {max(checks):.1e}")

print(" eta      f1        f2_plus   engine")
for s in out[::4]:
    print(f" {s.eta.real:.4f}  {s.f1:.2e}  {s.f2_plus:.2e}  {s.engine}")

k = int(np.argmin(f1))
print(f"global minimum of f1 at eta = {etas[k]:.4f} (value {f1[k]:.1e})")
j = 39  # eta = 1/3
print(f"eta = 1/3: f1 = {f1[j]:.4f}, neighbours {f1[j - 1]:.4f} / {f1[j + 1]:.4f}")
