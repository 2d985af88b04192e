"""
Chirality splitting at N = 9
============================

At alpha_L = 0 the two chiralities separate: the steady-state first site
matches the + helix target only at eta = 1/5 and the - target only at
eta = 1/10 and 3/10.  Several grid points sit on poles of the Lax
normalization; they are evaluated as a limit in eta.
"""

import os
import time

import numpy as np

from xyzness import ModelParams, eta_scan

u = 0.185j
p = ModelParams(u, 0.2, 0.65j, 0.0, u, 9, "B")
etas = [k / 200 for k in range(1, 80)]
os.environ.setdefault("XYZNESS_THREADS", "4")

t0 = time.perf_counter()
out = eta_scan(p, etas, oracle_every=0)
print(f"{len(out)} points in {time.perf_counter() - t0:.1f} s")
print("regularized points:", [round(s.eta.real, 4) for s in out if s.engine == "mpa-regularized"])

f2p = np.array([s.f2_plus for s in out])
f2m = np.array([s.f2_minus for s in out])
for name, f in (("f2_plus", f2p), ("f2_minus", f2m)):
    zeros = [round(etas[i], 4) for i in np.flatnonzero(f < 1e-8)]
    print(f"{name:>8} vanishes at eta = {zeros}; smallest other value {np.min(f[f >= 1e-8]):.1e}")
