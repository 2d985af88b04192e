"""
Theta functions and the elliptic XYZ gate
=========================================

Checks the theta-function identities the construction rests on, builds the
two-qubit XYZ gate in both unitary regimes and looks at its small-u limit
and the XXZ reduction.
"""

import numpy as np

from xyzness import build_gate, theta, theta_bar
from xyzness.gate import small_u_linear_term, unnormalized_gate, xyz_couplings
from xyzness.theta import IDENTITIES, check_theta_identity

tau = 0.65j
rng = np.random.default_rng(0)

# Two nome conventions: plain theta uses q = exp(2 i pi tau), bar uses exp(i pi tau).
print("theta_4(0.25)     =", theta(4, 0.25, tau))
print("theta_bar_4(0.25) =", theta_bar(4, 0.25, tau))

# Every identity at random complex arguments.
nargs = {"sum_product": 2, "antisymmetric": 2, "quartic": 4, "parity": 1, "quasi_period": 1, "cross_nome": 1}
for name in IDENTITIES:
    worst = max(
        check_theta_identity(name, rng.uniform(-1, 1, nargs[name]) + 0.2j * rng.uniform(-1, 1, nargs[name]), tau)
        for _ in range(50)
    )
    print(f"{name:>14}: max relative residual {worst:.1e}")

# Case B: real eta, imaginary u.  Case A: imaginary eta, real u.
for u, eta in ((0.185j, 0.3), (0.185, 0.1j)):
    G = build_gate(u=u, eta=eta, tau=tau)
    Uinv = build_gate(u=-u, eta=eta, tau=tau).entries
    print(f"u={u}, eta={eta}: ||UU^+ - I|| = {G.unitarity_error:.1e}, "
          f"||U(u)U(-u) - I|| = {np.linalg.norm(G.entries @ Uinv - np.eye(4)):.1e}")
print("nonzero pattern of U:\n", (np.abs(build_gate(u=0.185j, eta=0.3, tau=tau).entries) > 0).astype(int))

# Small u: U~(u) = I + u * c * (h + const) + O(u^2).
lin = small_u_linear_term(0.3, tau)
for u in (1e-2, 1e-3, 1e-4):
    err = np.linalg.norm(unnormalized_gate(1j * u, 0.3, tau) - np.eye(4) - 1j * u * lin)
    print(f"u = {u:.0e}i: first-order error {err:.2e}")

# As the nome goes to zero the couplings tend to (1, 1, cos(pi eta)).
for eta in (0.1, 0.3, 0.45):
    J = xyz_couplings(eta, 10j)
    print(f"eta = {eta}: J = {np.round(np.real(J), 12)}, cos(pi eta) = {np.cos(np.pi * eta):.12f}")
