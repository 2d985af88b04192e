"""
Pure helices and kinked descendants
===================================

Tuning the right reset makes the steady state a pure product helix; one
kink step lower gives a mixed state of rank N + 1.  The opposite chirality
winds the other way.
"""

import numpy as np

from xyzness import ModelParams, find_ness
from xyzness.helix import Chirality, HelixSpec, helix_alpha_R, helix_state, magnetization_profile
from xyzness.mpa import contract_ness

tau = 0.65j
aL = 0.165 + 0.13j
base = ModelParams(0.185j, 0.3, tau, aL, 0, 7, "B")

for ch in Chirality:
    p = base.with_(alpha_R=helix_alpha_R(base, ch))
    spec = HelixSpec.from_params(p)
    psi = helix_state(spec, p)
    rho = contract_ness(p).rho
    w = np.sort(np.linalg.eigvalsh(rho))[::-1]
    print(f"chirality {ch.value}: 1 - fidelity {1 - np.vdot(psi, rho @ psi).real:.1e}, second eigenvalue {w[1]:.1e}")
    prof = magnetization_profile(psi)
    print("  sz profile", np.round(prof.sz, 4))

for N in (3, 5):
    p = base.with_(N=N)
    p = p.with_(alpha_R=helix_alpha_R(p, kinks=1))
    w = np.linalg.eigvalsh(find_ness(p).rho)
    print(f"one kink, N = {N}: rank {int(np.sum(w > 1e-8))} (N + 1 = {N + 1})")
