"""
Boundary reset channels
=======================

A reset couples the edge qubit to a fresh ancilla in a theta-ray state,
applies the gate and discards the ancilla.  The same map comes as a closed
form Kraus pair; both are compared on the operator basis.
"""

import numpy as np

from xyzness import ModelParams, Side, boundary_state, build_gate, kraus_pair, reset_channel_direct
from xyzness.channels import apply_kraus, expansion_coefficients, kraus_pair_from_gate

tau = 0.65j
p = ModelParams(0.185j, 0.3, tau, 0.165 + 0.13j, 0.165 + 0.315j, 3, "B")
U = build_gate(p).entries
target = boundary_state(p.alpha_L, tau)
print("reset target psi(alpha_L) =", np.round(target.amplitudes, 6))

basis = [np.outer(np.eye(2)[i], np.eye(2)[j]) for i in range(2) for j in range(2)]
for side in Side:
    for label, kp in (("closed form", kraus_pair(side, p, target)), ("from gate", kraus_pair_from_gate(side, U, target))):
        dev = max(np.abs(apply_kraus(kp, E) - reset_channel_direct(side, U, target.amplitudes, E, validate=False)).max() for E in basis)
        print(f"{side.value:>5} {label:<11}: completeness {kp.completeness_error():.1e}, channel deviation {dev:.1e}")

# Only two of the sixteen basis-expansion coefficients survive.
C = expansion_coefficients(target.amplitudes)
print("nonzero C[j, k]:", [(j, k) for j in range(4) for k in range(4) if abs(C[j, k]) > 1e-12])

# The reset is trace preserving and, at u = 0, does nothing.
rho = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
out = reset_channel_direct(Side.LEFT, U, target.amplitudes, rho)
print("trace after reset:", np.trace(out).real)
print("u = 0 reset is identity:", np.allclose(reset_channel_direct(Side.LEFT, np.eye(4), target.amplitudes, rho), rho))
