"""Boundary reset states and the left/right reset channels.

A reset channel couples the boundary qubit to a fresh ancilla prepared in a
pure target state, applies the XYZ gate and traces the ancilla out.  The
same map is also available as an explicit pair of Kraus matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .gate import GateMatrix, ModelParams, build_gate, gate_entries, gate_prefactor
from .theta import theta

__all__ = [
    "Side",
    "DegenerateStateError",
    "InvalidStateError",
    "QubitVector",
    "KrausPair",
    "psi_vector",
    "xi_vector",
    "boundary_state",
    "reset_channel_direct",
    "kraus_pair",
    "kraus_pair_from_gate",
    "apply_kraus",
    "bloch_angles",
    "expansion_coefficients",
]


class DegenerateStateError(ValueError):
    """Both amplitudes of a qubit state vanish."""


class InvalidStateError(ValueError):
    """Input is not a valid density matrix."""


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class QubitVector:
    amplitudes: np.ndarray
    normalized: bool = True

    @classmethod
    def normalize(cls, amps) -> "QubitVector":
        amps = np.asarray(amps, dtype=complex)
        nrm = np.linalg.norm(amps)
        if nrm < 1e-300 or not np.isfinite(nrm):
            raise DegenerateStateError("qubit state has no nonzero component")
        return cls(amps / nrm, True)

    @property
    def projector(self) -> np.ndarray:
        a = self.amplitudes
        return np.outer(a, a.conj()) / np.vdot(a, a).real

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)


def psi_vector(x: complex, tau: complex) -> np.ndarray:
    """Unnormalized ket ``(th1(x), th4(x))``."""
    return np.array([theta(1, x, tau), theta(4, x, tau)])


def xi_vector(x: complex, tau: complex) -> np.ndarray:
    """Unnormalized bra ``(th4(x), -th1(x))`` as a row of components; orthogonal to psi(x)."""
    return np.array([theta(4, x, tau), -theta(1, x, tau)])


def boundary_state(alpha: complex, tau: complex) -> QubitVector:
    """Normalized reset target proportional to ``(th1(alpha), th4(alpha))``."""
    return QubitVector.normalize(psi_vector(alpha, tau))


def _check_density(rho, tol=1e-12):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise InvalidStateError(f"expected a 2x2 matrix, got shape {rho.shape}")
    if np.linalg.norm(rho - rho.conj().T) > tol:
        raise InvalidStateError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise InvalidStateError("density matrix does not have unit trace")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise InvalidStateError("density matrix is not positive semidefinite")
    return rho


def _reset(side: Side, U: np.ndarray, target: np.ndarray, A: np.ndarray) -> np.ndarray:
    # Works for arbitrary 2x2 A (linear map), not only states.
    P = np.outer(target, target.conj())
    if Side(side) is Side.LEFT:
        full = U @ np.kron(P, A) @ U.conj().T
        return np.einsum("aiaj->ij", full.reshape(2, 2, 2, 2))
    full = U @ np.kron(A, P) @ U.conj().T
    return np.einsum("iaja->ij", full.reshape(2, 2, 2, 2))


def reset_channel_direct(side, gate, target, rho, validate: bool = True) -> np.ndarray:
    """Apply a reset channel by conjugating with the gate and tracing the ancilla.

    Left: ``tr_1(U (rho_L (x) rho) U^dag)``; right: ``tr_2(U (rho (x) rho_R) U^dag)``.
    ``validate=False`` lets the map act on any 2x2 operator.
    """
    if validate:
        rho = _check_density(rho)
    U = np.asarray(gate, dtype=complex)
    t = np.asarray(target, dtype=complex)
    t = t / np.linalg.norm(t)
    return _reset(Side(side), U, t, np.asarray(rho, dtype=complex))


@dataclass(frozen=True)
class KrausPair:
    K1: np.ndarray
    K2: np.ndarray
    side: Side

    def completeness_error(self) -> float:
        S = self.K1.conj().T @ self.K1 + self.K2.conj().T @ self.K2
        return float(np.linalg.norm(S - np.eye(2)))

    def __call__(self, rho) -> np.ndarray:
        return apply_kraus(self, rho)


def apply_kraus(kp: KrausPair, rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    return kp.K1 @ rho @ kp.K1.conj().T + kp.K2 @ rho @ kp.K2.conj().T


def bloch_angles(amps) -> tuple:
    """Polar and azimuthal angle of a qubit ray, global phase removed."""
    a1, a2 = np.asarray(amps, dtype=complex)
    th = 2.0 * np.arctan2(abs(a2), abs(a1))
    ph = np.angle(a2) - np.angle(a1) if abs(a1) > 0 and abs(a2) > 0 else 0.0
    return float(th), float(ph)


def _kraus_from_weights(r, pref, th, ph, side) -> KrausPair:
    r1, r2, r3, r4 = r
    c2, s2 = np.cos(th / 2) ** 2, np.sin(th / 2) ** 2
    F = np.sin(th) / 2
    em, ep = np.exp(-1j * ph), np.exp(1j * ph)

    def f(x, y):
        return x * c2 + y * s2

    def ft(x, y):
        return x * em * c2 - y * ep * s2

    def g(x, y):
        return em * x + ep * y

    K1 = pref * np.array([[f(r1, r3), g(r2, r4) * F], [g(r4, r2) * F, f(r3, r1)]])
    K2 = pref * np.array([[(r3 - r1) * F, ft(r2, r4)], [ft(r4, r2), (r1 - r3) * F]])
    return KrausPair(K1, K2, Side(side))


def kraus_pair(side, p: ModelParams, target: QubitVector | np.ndarray) -> KrausPair:
    """Closed-form two-element Kraus decomposition of a reset channel.

    The target ray is converted to Bloch angles; the gate enters through its
    four Boltzmann weights and the square-root prefactor.  By the qubit-swap
    symmetry of the gate the same formulas serve both sides.
    """
    th, ph = bloch_angles(np.asarray(target))
    r = gate_entries(p.u, p.eta, p.tau)
    pref = gate_prefactor(p.u, p.eta, p.tau)
    return _kraus_from_weights(r, pref, th, ph, side)


def kraus_pair_from_gate(side, gate: GateMatrix | np.ndarray, target) -> KrausPair:
    """Kraus pair from a partial trace of the gate against the target basis.

    ``K1 = tr_1((phi_0^dag (x) I) U)`` and ``K2 = tr_1((phi_3^dag (x) I) U)``
    with ``phi_0 = |t><t|`` and ``phi_3 = |t_perp><t|``.
    """
    U = np.asarray(gate, dtype=complex)
    t = np.asarray(target, dtype=complex)
    t = t / np.linalg.norm(t)
    tp = np.array([-t[1].conj(), t[0].conj()])
    phis = (np.outer(t, t.conj()), np.outer(tp, t.conj()))
    if Side(side) is Side.RIGHT:
        # Same expansion on the second tensor factor.
        U = U.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    T = U.reshape(2, 2, 2, 2)
    Ks = [np.einsum("ba,aibj->ij", phi.conj().T, T) for phi in phis]
    return KrausPair(Ks[0], Ks[1], Side(side))


def expansion_coefficients(target) -> np.ndarray:
    """All 16 coefficients ``C[j, k] = tr(phi_k phi_0 phi_j^dag)`` of the target basis."""
    t = np.asarray(target, dtype=complex)
    t = t / np.linalg.norm(t)
    tp = np.array([-t[1].conj(), t[0].conj()])
    V = np.column_stack([t, tp])
    basis = [np.diag([1, 0]), np.diag([0, 1]), np.array([[0, 1], [0, 0]]), np.array([[0, 0], [1, 0]])]
    phis = [V @ b @ V.conj().T for b in basis]
    C = np.empty((4, 4), dtype=complex)
    for j in range(4):
        for k in range(4):
            C[j, k] = np.trace(phis[k] @ phis[0] @ phis[j].conj().T)
    return C
