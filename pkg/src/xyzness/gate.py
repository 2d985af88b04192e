"""Elliptic XYZ two-qubit gate, model parameters and the XYZ energy density."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .theta import theta, theta_bar, theta_bar_derivative

__all__ = [
    "Regime",
    "ModelParams",
    "ParameterError",
    "SingularParameterError",
    "GateMatrix",
    "HamiltonianDensity",
    "PAULI",
    "build_gate",
    "gate_entries",
    "unnormalized_gate",
    "gate_prefactor",
    "xyz_couplings",
    "hamiltonian_density",
    "small_u_linear_term",
    "EIGHT_VERTEX_PATTERN",
]

_SINGULAR = 1e-12
_REGIME_TOL = 1e-12

PAULI = {
    "I": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

EIGHT_VERTEX_PATTERN = frozenset({(0, 0), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0), (3, 3)})


class ParameterError(ValueError):
    """Invalid model parameters (regime violation, even N, bad tau)."""


class SingularParameterError(ValueError):
    """A theta value in a denominator vanishes at these parameters."""


class Regime(str, enum.Enum):
    CASE_A = "A"  # eta imaginary, u real
    CASE_B = "B"  # eta real, u imaginary
    GENERAL = "general"


@dataclass(frozen=True)
class ModelParams:
    """All constants of the boundary-driven XYZ circuit.

    ``N`` is the number of interior qubits (odd).  ``regime`` selects which
    of the two unitary parameter families the values must belong to;
    ``Regime.GENERAL`` skips that check and is only meant for probing
    algebraic identities off the unitary manifold.
    """

    u: complex
    eta: complex
    tau: complex
    alpha_L: complex = 0.0
    alpha_R: complex = 0.0
    N: int = 3
    regime: Regime = Regime.GENERAL

    def __post_init__(self):
        for name in ("u", "eta", "tau", "alpha_L", "alpha_R"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "regime", Regime(self.regime))
        if not self.tau.imag > 0:
            raise ParameterError(f"Im(tau) must be positive, got {self.tau}")
        if int(self.N) != self.N or self.N < 1 or self.N % 2 == 0:
            raise ParameterError(f"N must be an odd positive integer, got {self.N}")
        object.__setattr__(self, "N", int(self.N))
        if self.regime is Regime.CASE_A:
            if abs(self.eta.real) > _REGIME_TOL or abs(self.u.imag) > _REGIME_TOL:
                raise ParameterError("case A requires imaginary eta and real u")
        elif self.regime is Regime.CASE_B:
            if abs(self.eta.imag) > _REGIME_TOL or abs(self.u.real) > _REGIME_TOL:
                raise ParameterError("case B requires real eta and imaginary u")

    @property
    def unitary(self) -> bool:
        return self.regime is not Regime.GENERAL

    def with_(self, **changes) -> "ModelParams":
        """Copy with some fields replaced (re-validated)."""
        return replace(self, **changes)

    @classmethod
    def infer(cls, u, eta, tau, alpha_L=0.0, alpha_R=0.0, N=3) -> "ModelParams":
        """Build params, picking case A or B from the values when they qualify."""
        u, eta = complex(u), complex(eta)
        if abs(eta.real) <= _REGIME_TOL and abs(u.imag) <= _REGIME_TOL:
            regime = Regime.CASE_A
        elif abs(eta.imag) <= _REGIME_TOL and abs(u.real) <= _REGIME_TOL:
            regime = Regime.CASE_B
        else:
            regime = Regime.GENERAL
        return cls(u, eta, tau, alpha_L, alpha_R, N, regime)


@dataclass(frozen=True)
class GateMatrix:
    entries: np.ndarray
    prefactor: complex
    unitarity_error: float

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return self.unitarity_error < tol

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


@dataclass(frozen=True)
class HamiltonianDensity:
    entries: np.ndarray
    couplings: tuple


def _check(value: complex, label: str) -> complex:
    if abs(value) < _SINGULAR:
        raise SingularParameterError(f"{label} vanishes (|{label}| = {abs(value):.2e})")
    return value


def gate_entries(u: complex, eta: complex, tau: complex) -> tuple:
    """The four Boltzmann weights ``(r1, r2, r3, r4)`` of the unnormalized gate."""
    t40 = _check(theta(4, 0, tau), "th4(0)")
    t1e = _check(theta(1, eta, tau), "th1(eta)")
    t4e = _check(theta(4, eta, tau), "th4(eta)")
    t1u, t4u = theta(1, u, tau), theta(4, u, tau)
    t1ue, t4ue = theta(1, u + eta, tau), theta(4, u + eta, tau)
    r1 = t4u * t1ue / (t40 * t1e)
    r2 = t1u * t4ue / (t40 * t1e)
    r3 = t4u * t4ue / (t40 * t4e)
    r4 = t1u * t1ue / (t40 * t4e)
    return r1, r2, r3, r4


def unnormalized_gate(u: complex, eta: complex, tau: complex) -> np.ndarray:
    r1, r2, r3, r4 = gate_entries(u, eta, tau)
    return np.array(
        [[r1, 0, 0, r4], [0, r3, r2, 0], [0, r2, r3, 0], [r4, 0, 0, r1]], dtype=complex
    )


def gate_prefactor(u: complex, eta: complex, tau: complex) -> complex:
    num = theta_bar(1, eta, tau) ** 2
    den = _check(theta_bar(1, eta + u, tau), "tb1(eta+u)") * _check(
        theta_bar(1, eta - u, tau), "tb1(eta-u)"
    )
    return complex(np.sqrt(num / den))


def build_gate(p: ModelParams | None = None, *, u=None, eta=None, tau=None) -> GateMatrix:
    """XYZ gate ``U(u, eta)`` including the square-root prefactor (principal branch).

    Either pass a :class:`ModelParams` or the keywords ``u``, ``eta``, ``tau``.
    """
    if p is not None:
        u, eta, tau = p.u, p.eta, p.tau
    u, eta, tau = complex(u), complex(eta), complex(tau)
    pref = gate_prefactor(u, eta, tau)
    U = pref * unnormalized_gate(u, eta, tau)
    err = float(np.linalg.norm(U @ U.conj().T - np.eye(4)))
    return GateMatrix(U, pref, err)


def xyz_couplings(eta: complex, tau: complex) -> tuple:
    """Couplings ``(J1, J2, J3)`` of the XYZ density the gate generates."""
    J1 = theta_bar(4, eta, tau) / _check(theta_bar(4, 0, tau), "tb4(0)")
    J2 = theta_bar(3, eta, tau) / _check(theta_bar(3, 0, tau), "tb3(0)")
    J3 = theta_bar(2, eta, tau) / _check(theta_bar(2, 0, tau), "tb2(0)")
    return J1, J2, J3


def hamiltonian_density(eta: complex, tau: complex) -> HamiltonianDensity:
    """``h = sum_a J_a sigma^a (x) sigma^a`` as a 4x4 matrix."""
    J = xyz_couplings(eta, tau)
    h = sum(Ja * np.kron(PAULI[s], PAULI[s]) for Ja, s in zip(J, "xyz"))
    return HamiltonianDensity(h, J)


def small_u_linear_term(eta: complex, tau: complex) -> np.ndarray:
    """First-order coefficient ``c (h + tb1'(eta)/tb1'(0) I)`` of the unnormalized gate in u."""
    d0 = theta_bar_derivative(1, 0, tau)
    c = d0 / (2 * _check(theta_bar(1, eta, tau), "tb1(eta)"))
    h = hamiltonian_density(eta, tau).entries
    return c * (h + theta_bar_derivative(1, eta, tau) / d0 * np.eye(4))
