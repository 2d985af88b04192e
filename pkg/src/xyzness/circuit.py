"""Dense density-matrix simulator for the open and periodic brickwork circuits.

This is the brute-force reference against which the matrix product
construction is checked.  States are ``2**N x 2**N`` arrays with qubit 1 as
the most significant tensor factor.  Gates and Kraus maps act locally by
reshaping, so no ``2**N``-sized operator is ever built.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigs

from .channels import Side, boundary_state, kraus_pair_from_gate
from .gate import ModelParams, build_gate

__all__ = [
    "DimensionMismatchError",
    "NotConvergedError",
    "OddSizeError",
    "NessResult",
    "CircuitOps",
    "apply_two_site",
    "apply_one_site_kraus",
    "apply_even_step",
    "apply_odd_step",
    "find_ness",
    "periodic_step",
    "trace_distance",
    "maximally_mixed",
    "single_site_density",
    "superoperator_n1",
    "ness_n1_eigensolve",
]

log = logging.getLogger(__name__)

_STALL_WINDOW = 200


class DimensionMismatchError(ValueError):
    pass


class NotConvergedError(RuntimeError):
    """Raised by ``find_ness(..., strict=True)``; carries the best result."""

    def __init__(self, msg, result):
        super().__init__(msg)
        self.result = result


class OddSizeError(ValueError):
    pass


def _nqubits(rho: np.ndarray) -> int:
    d = rho.shape[0]
    n = int(round(np.log2(d)))
    if rho.shape != (d, d) or 2**n != d:
        raise DimensionMismatchError(f"density matrix shape {rho.shape} is not 2^N x 2^N")
    return n


def apply_two_site(rho: np.ndarray, U: np.ndarray, i: int, j: int) -> np.ndarray:
    """``U rho U^dag`` with ``U`` acting on qubits ``i, j`` (0-based, any order)."""
    n = _nqubits(rho)
    T = rho.reshape((2,) * (2 * n))
    G = U.reshape(2, 2, 2, 2)
    # rows: contract input legs i, j
    T = np.tensordot(G, T, axes=([2, 3], [i, j]))
    T = np.moveaxis(T, [0, 1], [i, j])
    # columns: rho U^dag -> contract with conj(U) on the column legs
    T = np.tensordot(T, G.conj(), axes=([n + i, n + j], [2, 3]))
    T = np.moveaxis(T, [2 * n - 2, 2 * n - 1], [n + i, n + j])
    return T.reshape(rho.shape)


def apply_one_site_kraus(rho: np.ndarray, kraus, i: int) -> np.ndarray:
    """``sum_k K rho K^dag`` on qubit ``i``."""
    n = _nqubits(rho)
    T = rho.reshape((2,) * (2 * n))
    out = 0
    for K in kraus:
        S = np.tensordot(K, T, axes=([1], [i]))
        S = np.moveaxis(S, 0, i)
        S = np.tensordot(S, K.conj(), axes=([n + i], [1]))
        S = np.moveaxis(S, 2 * n - 1, n + i)
        out = out + S
    return out.reshape(rho.shape)


@dataclass
class CircuitOps:
    """Gate and boundary Kraus maps for a parameter set, built once."""

    U: np.ndarray
    KL: tuple
    KR: tuple
    N: int

    @classmethod
    def from_params(cls, p: ModelParams) -> "CircuitOps":
        U = build_gate(p).entries
        kl = kraus_pair_from_gate(Side.LEFT, U, boundary_state(p.alpha_L, p.tau).amplitudes)
        kr = kraus_pair_from_gate(Side.RIGHT, U, boundary_state(p.alpha_R, p.tau).amplitudes)
        return cls(U, (kl.K1, kl.K2), (kr.K1, kr.K2), p.N)


def _ops(p) -> CircuitOps:
    return p if isinstance(p, CircuitOps) else CircuitOps.from_params(p)


def apply_even_step(rho: np.ndarray, p) -> np.ndarray:
    """Gates on pairs (1,2), (3,4), ..., (N-2, N-1) and the right reset on qubit N."""
    ops = _ops(p)
    if _nqubits(rho) != ops.N:
        raise DimensionMismatchError(f"state has {_nqubits(rho)} qubits, params say N={ops.N}")
    for i in range(0, ops.N - 1, 2):
        rho = apply_two_site(rho, ops.U, i, i + 1)
    return apply_one_site_kraus(rho, ops.KR, ops.N - 1)


def apply_odd_step(rho: np.ndarray, p) -> np.ndarray:
    """The left reset on qubit 1 and gates on pairs (2,3), (4,5), ..., (N-1, N)."""
    ops = _ops(p)
    if _nqubits(rho) != ops.N:
        raise DimensionMismatchError(f"state has {_nqubits(rho)} qubits, params say N={ops.N}")
    rho = apply_one_site_kraus(rho, ops.KL, 0)
    for i in range(1, ops.N - 1, 2):
        rho = apply_two_site(rho, ops.U, i, i + 1)
    return rho


def trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    d = np.asarray(a) - np.asarray(b)
    d = (d + d.conj().T) / 2
    return float(0.5 * np.abs(np.linalg.eigvalsh(d)).sum())


def single_site_density(rho: np.ndarray, i: int) -> np.ndarray:
    """Reduced 2x2 density matrix of qubit ``i`` (0-based)."""
    n = _nqubits(rho)
    if not 0 <= i < n:
        raise IndexError(f"qubit {i} out of range for N={n}")
    T = rho.reshape(2**i, 2, 2 ** (n - i - 1), 2**i, 2, 2 ** (n - i - 1))
    return np.einsum("aibajb->ij", T)


def maximally_mixed(N: int) -> np.ndarray:
    d = 2**N
    return np.eye(d, dtype=complex) / d


@dataclass
class NessResult:
    rho: np.ndarray
    iterations: int
    residual: float
    converged: bool
    degenerate: bool = False
    rho_odd: np.ndarray | None = field(default=None, repr=False)


def _krylov_fixed_point(ops: CircuitOps, rho0: np.ndarray, tol: float) -> np.ndarray:
    d = rho0.shape[0]

    def matvec(x):
        X = x.reshape(d, d)
        return apply_odd_step(apply_even_step(X, ops), ops).reshape(-1)

    n = d * d
    # A wide Arnoldi basis matters when the gap below eigenvalue 1 is tiny
    # (near helix points it can be ~1e-4); cap the basis at ~128 MB.
    ncv = int(np.clip(2**23 // n, 20, 80))
    ncv = min(ncv, n - 1)
    A = LinearOperator((n, n), matvec=matvec, dtype=complex)
    _, vecs = eigs(A, k=1, which="LM", v0=rho0.reshape(-1), ncv=ncv, tol=min(tol, 1e-14), maxiter=100000)
    X = vecs[:, 0].reshape(d, d)
    X = X / np.trace(X)
    return (X + X.conj().T) / 2


def find_ness(
    p: ModelParams,
    tol: float = 1e-12,
    max_iter: int = 20000,
    rho0: np.ndarray | None = None,
    odd: bool = False,
    strict: bool = False,
    method: str = "krylov",
) -> NessResult:
    """Fixed point of one full period ``M_o M_e``.

    Convergence is declared when the trace distance between successive
    iterates drops below ``tol``.  With ``method='iterate'`` the map is
    simply applied from the maximally mixed state; ``method='krylov'``
    (default) first jumps to the leading eigenvector with ARPACK and then
    keeps iterating until the same criterion holds or the residual stops
    improving.  This matters for slowly mixing parameters, where plain
    iteration needs ~1/gap periods per digit.

    If the first period leaves the maximally mixed state unchanged the map
    is numerically the identity on it and the result is flagged
    ``degenerate``: the fixed point is then not unique.

    Parameters
    ----------
    odd : bool
        Also return ``rho_odd = M_e(rho)``, the fixed point of ``M_e M_o``.
    strict : bool
        Raise :class:`NotConvergedError` instead of returning an unconverged result.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if method not in ("krylov", "iterate"):
        raise ValueError(f"unknown method {method!r}")
    if not p.unitary:
        raise ValueError("find_ness needs a unitary regime (case A or B)")
    ops = CircuitOps.from_params(p)
    rho = maximally_mixed(p.N) if rho0 is None else np.array(rho0, dtype=complex)

    first = apply_odd_step(apply_even_step(rho, ops), ops)
    if trace_distance(first, rho) < tol:
        log.warning("first period leaves the state unchanged: fixed point may not be unique")
        out = NessResult(rho, 1, trace_distance(first, rho), False, True)
        if odd:
            out.rho_odd = apply_even_step(rho, ops)
        return out

    if method == "krylov" and p.N > 1:
        rho = _krylov_fixed_point(ops, rho, tol)
    res = np.inf
    it = 0
    mark = np.inf
    for it in range(1, max_iter + 1):
        new = apply_odd_step(apply_even_step(rho, ops), ops)
        new = (new + new.conj().T) / 2
        # Entrywise l1 norm bounds twice the trace distance; cheap for large N.
        res = float(np.abs(new - rho).sum()) / 2
        rho = new
        if res < tol:
            break
        # After a Krylov start the iteration only polishes; give up once it
        # stops gaining (slow mixing leaves the residual flat).
        if method == "krylov" and it % _STALL_WINDOW == 0:
            if res > 0.5 * mark:
                break
            mark = res
    res = trace_distance(apply_odd_step(apply_even_step(rho, ops), ops), rho)
    converged = res < tol
    out = NessResult(rho, it, res, converged, False)
    if odd:
        out.rho_odd = apply_even_step(rho, ops)
    if strict and not converged:
        raise NotConvergedError(f"no convergence after {it} iterations (residual {res:.2e})", out)
    return out


def periodic_step(rho: np.ndarray, p: ModelParams, M: int, which: str = "both") -> np.ndarray:
    """Coherent brickwork step on an even ring of ``M`` qubits.

    ``which='even'`` applies gates on (1,2), (3,4), ..., (M-1, M); ``'odd'``
    applies (2,3), ..., (M-2, M-1) and the wrap-around pair (M, 1);
    ``'both'`` applies even then odd.
    """
    if M % 2:
        raise OddSizeError(f"periodic circuit needs even M, got {M}")
    if _nqubits(rho) != M:
        raise DimensionMismatchError(f"state has {_nqubits(rho)} qubits, expected M={M}")
    U = build_gate(p).entries
    if which in ("even", "both"):
        for i in range(0, M, 2):
            rho = apply_two_site(rho, U, i, i + 1)
    if which in ("odd", "both"):
        for i in range(1, M - 1, 2):
            rho = apply_two_site(rho, U, i, i + 1)
        rho = apply_two_site(rho, U, M - 1, 0)
    if which not in ("even", "odd", "both"):
        raise ValueError(f"which must be 'even', 'odd' or 'both', got {which!r}")
    return rho


def superoperator_n1(p: ModelParams) -> np.ndarray:
    """4x4 matrix of ``K_L o K_R`` acting on row-major vectorized 2x2 operators."""
    ops = CircuitOps.from_params(p)
    S = np.zeros((4, 4), dtype=complex)
    for k in range(4):
        E = np.zeros(4, dtype=complex)
        E[k] = 1
        A = E.reshape(2, 2)
        A = sum(K @ A @ K.conj().T for K in ops.KR)
        A = sum(K @ A @ K.conj().T for K in ops.KL)
        S[:, k] = A.reshape(4)
    return S


def ness_n1_eigensolve(p: ModelParams) -> np.ndarray:
    """N=1 steady state from the eigenvector of the 4x4 superoperator at eigenvalue 1."""
    if p.N != 1:
        raise DimensionMismatchError("superoperator oracle is only for N=1")
    w, V = np.linalg.eig(superoperator_n1(p))
    v = V[:, np.argmin(abs(w - 1))].reshape(2, 2)
    v = v / np.trace(v)
    return (v + v.conj().T) / 2
