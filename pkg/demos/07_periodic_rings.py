"""
Helices on periodic rings
=========================

On an even ring of M qubits with eta M in 2Z, every helix of either
chirality is a stationary state of the coherent brickwork circuit.  The
family spans a subspace whose dimension is compared with 2M.
"""

import numpy as np

from xyzness import ModelParams, periodic_checks
from xyzness.helix import Chirality, Geometry, HelixSpec, helix_factors, magnetization_profile

tau = 0.65j
aL = 0.165 + 0.13j
for M in (4, 6, 8):
    p = ModelParams(0.185j, 2 / M, tau, aL, 0, 3, "B")
    rep = periodic_checks(p, M, n_alpha=6, seed=M)
    print(f"M = {M}: stationarity {rep.max_residual:.1e}, projector Gram rank {rep.gram_rank}, "
          f"ket span rank {rep.ket_span_rank}, 2M = {rep.conjectured_degeneracy}")

# The profile of a single ring helix, even and odd half steps.
M = 6
p = ModelParams(0.185j, 2 / M, tau, aL, 0, 3, "B")
spec = HelixSpec(aL, M, Chirality.PLUS, 0, Geometry.PERIODIC_EVEN)
prof = magnetization_profile(helix_factors(spec, p))
print("site   sx       sy       sz")
for n, (x, y, z) in enumerate(zip(prof.sx, prof.sy, prof.sz), 1):
    print(f"{n:>3}  {x:+.4f}  {y:+.4f}  {z:+.4f}")
print("Bloch vector norms:", np.round(prof.bloch_norms(), 12))

# Without the closure condition the ring rejects the request.
try:
    periodic_checks(p.with_(eta=0.3), M)
except ValueError as exc:
    print("eta = 0.3:", exc)
