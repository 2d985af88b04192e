"""Exact steady state of the boundary-driven XYZ circuit as a matrix product ansatz.

The density operator is a sum over walks on the doubled auxiliary lattice
``(j, j')``.  Each site contributes the product of a Lax block from replica
``a`` with the adjoint of a Lax block from replica ``b``::

    rho = sum  l[j0, j0'] * (A_1 B_1^dag) (x) ... (x) (A_N B_N^dag) * r[jN, jN']

where ``A_n`` is the ``(j_{n-1}, j_n)`` block of the site-``n`` Lax operator.
The Lax operators are banded (only ``j -> j`` and ``j -> j+1``), ``<L|``
lives on ``{0,1}^2`` and so only ``j, j' <= N + 1`` are ever reached.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .channels import Side, boundary_state, psi_vector, reset_channel_direct, xi_vector
from .gate import ModelParams, Regime, SingularParameterError, build_gate
from .theta import theta_bar

__all__ = [
    "LaxKind",
    "Parity",
    "PoleAtSiteError",
    "PoleInBError",
    "WrongRegimeError",
    "NonHermitianResultError",
    "AuxVector",
    "MpaNess",
    "lax_block",
    "lax_matrices",
    "left_vector",
    "right_vector",
    "b_coefficient",
    "contract_ness",
    "reduced_density",
    "regularized",
    "verify_rll",
    "boundary_residuals",
    "schmidt_values",
]

_POLE = 1e-12
_ZERO = 1e-12


class PoleAtSiteError(ZeroDivisionError):
    def __init__(self, m, value):
        super().__init__(f"Lax normalization tb2(a + m eta) vanishes at m={m} (|value|={abs(value):.2e})")
        self.m = m


class PoleInBError(ZeroDivisionError):
    def __init__(self, n):
        super().__init__(
            f"b_{n} has a pole; the right vector should be renormalized to its "
            f"components with j, j' > {n} (pass renormalize=True)"
        )
        self.n = n


class WrongRegimeError(ValueError):
    pass


class NonHermitianResultError(ArithmeticError):
    pass


class LaxKind(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"
    PLUS_CONJ = "+*"
    MINUS_CONJ = "-*"


class Parity(str, enum.Enum):
    EVEN_TOP = "even"  # rho_inf, chain starts with L^+
    ODD_TOP = "odd"  # rho'_inf, chain starts with L^-


# ------------------------------------------------------------------ Lax blocks

def lax_matrices(m, u, eta, tau, a) -> dict:
    """The four rank-1 matrices ``L(m), L'(m), X(m), X'(m)`` keyed ``'L', 'Lp', 'X', 'Xp'``."""
    C = theta_bar(2, a + m * eta, tau)
    if abs(C) < _POLE:
        raise PoleAtSiteError(m, C)
    x = m * eta + a

    def op(ket_arg, bra_arg):
        return np.outer(psi_vector(ket_arg, tau), xi_vector(bra_arg, tau)) / C

    return {
        "L": op(x, -u - x),
        "Lp": op(u + x, -x),
        "X": op(x - u, -x),
        "Xp": op(x, u - x),
    }


def lax_block(kind, n: int, j: int, p: ModelParams, a=None, offset: int = 0) -> np.ndarray:
    """Block ``(j, j + offset)`` of the site-``n`` Lax operator of the given kind.

    ``offset`` is 0 (diagonal) or 1 (superdiagonal); every other block is zero.
    The ``*`` kinds return the adjoint of the corresponding 2x2 block.
    """
    kind = LaxKind(kind)
    a = p.alpha_L if a is None else complex(a)
    if offset not in (0, 1):
        return np.zeros((2, 2), dtype=complex)
    mats = lax_matrices(n - 2 * j, p.u, p.eta, p.tau, a)
    plus = kind in (LaxKind.PLUS, LaxKind.PLUS_CONJ)
    key = ("L" if offset == 0 else "Xp") if plus else ("Lp" if offset == 0 else "X")
    out = mats[key]
    if kind in (LaxKind.PLUS_CONJ, LaxKind.MINUS_CONJ):
        out = out.conj().T
    return out


class _LaxCache:
    """Per-parameter cache of (m -> matrices); sites share m = n - 2j values."""

    def __init__(self, p: ModelParams, a):
        self.p = p
        self.a = complex(a)
        self._m = {}

    def mats(self, m):
        if m not in self._m:
            p = self.p
            self._m[m] = lax_matrices(m, p.u, p.eta, p.tau, self.a)
        return self._m[m]

    def block(self, plus: bool, n: int, j: int, k: int):
        if k == j:
            return self.mats(n - 2 * j)["L" if plus else "Lp"]
        if k == j + 1:
            return self.mats(n - 2 * j)["Xp" if plus else "X"]
        return None

    def site_op(self, plus: bool, n: int, j: int, k: int, jp: int, kp: int):
        """Physical 2x2 operator for aux steps ``j -> k`` (replica a), ``jp -> kp`` (b)."""
        A = self.block(plus, n, j, k)
        B = self.block(plus, n, jp, kp)
        if A is None or B is None:
            return None
        return A @ B.conj().T


# ------------------------------------------------------------ boundary vectors

@dataclass
class AuxVector:
    """Sparse coefficients ``(j, j') -> c`` of a doubled auxiliary vector."""

    side: str
    coeffs: dict
    jmax: int

    def as_matrix(self, size: int | None = None) -> np.ndarray:
        size = self.jmax + 1 if size is None else size
        M = np.zeros((size, size), dtype=complex)
        for (j, jp), c in self.coeffs.items():
            if j < size and jp < size:
                M[j, jp] = c
        return M

    @property
    def support(self) -> set:
        return {k for k, c in self.coeffs.items() if c != 0}

    def __getitem__(self, key):
        return self.coeffs.get(key, 0.0)


def _regime(p: ModelParams) -> Regime:
    if p.regime is Regime.GENERAL:
        raise WrongRegimeError("boundary vectors are only known for case A or case B")
    return p.regime


def _nz(value, label):
    if abs(value) < _POLE:
        raise SingularParameterError(f"{label} vanishes at these parameters")
    return value


def left_vector(p: ModelParams) -> AuxVector:
    """Four-component left boundary vector with ``l00 = 1`` and ``l10 = conj(l01)``."""
    reg = _regime(p)
    u, tau = p.u, p.tau
    w0, w1 = p.alpha_L.real, p.alpha_L.imag
    tb = theta_bar
    if reg is Regime.CASE_B:
        d = _nz(tb(3, u + 1j * w1, tau), "tb3(u + i w1)")
        l11 = tb(3, u - 1j * w1, tau) / d
        l01 = tb(3, 1j * w1, tau) * tb(4, u + w0, tau) / (d * _nz(tb(4, w0, tau), "tb4(w0)"))
    else:
        d = _nz(tb(4, u + w0, tau), "tb4(u + w0)")
        l11 = tb(4, u - w0, tau) / d
        l01 = tb(3, u + 1j * w1, tau) * tb(4, w0, tau) / (d * _nz(tb(3, 1j * w1, tau), "tb3(i w1)"))
    coeffs = {(0, 0): 1.0 + 0j, (0, 1): l01, (1, 0): np.conj(l01), (1, 1): l11}
    return AuxVector("left", coeffs, 1)


def _nu_gamma(p: ModelParams):
    Gam = p.alpha_L + (p.N + 1) * p.eta
    nu = 0.5 * (p.alpha_R - p.alpha_L - p.u - (p.N + 1) * p.eta)
    return nu, Gam


def b_coefficient(n: int, p: ModelParams):
    """``b_n`` as ``(numerator factors, denominator factors)`` of theta values."""
    nu, Gam = _nu_gamma(p)
    u, eta, tau = p.u, p.eta, p.tau
    num = (theta_bar(1, n * eta + nu, tau), theta_bar(2, u + Gam - n * eta + nu, tau))
    den = (theta_bar(1, u + (n + 1) * eta + nu, tau), theta_bar(2, Gam - (n + 1) * eta + nu, tau))
    return num, den


def _classify_b(n, p):
    """Return ``('zero' | 'pole' | 'regular', value)`` for b_n."""
    num, den = b_coefficient(n, p)
    mags = [abs(x) for x in num + den]
    scale = np.exp(np.mean(np.log([m for m in mags if m > 0] or [1.0])))
    if min(abs(x) for x in num) < _ZERO * scale:
        return "zero", 0.0
    if min(abs(x) for x in den) < _POLE * scale:
        return "pole", -(num[0] * num[1]) / (den[0] * den[1] if abs(den[0] * den[1]) > 0 else 1.0)
    return "regular", -(num[0] * num[1]) / (den[0] * den[1])


def _C_coeff(j, jp, p, reg):
    nu, Gam = _nu_gamma(p)
    G0, G1 = Gam.real, Gam.imag
    eta, tau = p.eta, p.tau
    tb = theta_bar
    if reg is Regime.CASE_B:
        return (
            tb(3, (j - jp) * eta - 1j * G1, tau)
            * tb(4, (j + jp) * eta - G0, tau)
            / (tb(3, 1j * G1, tau) * tb(4, G0, tau))
        )
    return (
        tb(4, (j - jp) * eta - G0, tau)
        * tb(3, (j + jp) * eta - 1j * G1, tau)
        / (tb(4, G0, tau) * tb(3, 1j * G1, tau))
    )


def right_vector(p: ModelParams, jmax: int | None = None, renormalize: bool = True) -> AuxVector:
    """Right boundary vector ``r[j, j'] = C[j, j'] prod b_k prod conj(b_k')`` for ``j, j' <= jmax``.

    A vanishing ``b_m`` crops the support to ``{0..m}^2``.  If instead the
    first singular ``b_m`` is a pole, the vector diverges; with
    ``renormalize=True`` it is replaced by its leading part, the components
    with ``j, j' > m`` with ``b_m`` dropped from the products.
    """
    reg = _regime(p)
    jmax = p.N + 2 if jmax is None else int(jmax)
    bs = []
    pole_at = None
    crop = jmax
    for n in range(jmax):
        kind, val = _classify_b(n, p)
        if kind == "zero":
            crop = n
            break
        if kind == "pole":
            if not renormalize:
                raise PoleInBError(n)
            pole_at = n
            bs.append(1.0)
            continue
        bs.append(val)
    prods = np.ones(len(bs) + 1, dtype=complex)
    for n, b in enumerate(bs):
        prods[n + 1] = prods[n] * b
    coeffs = {}
    rng = range(crop + 1)
    for j, jp in itertools.product(rng, rng):
        if pole_at is not None and (j <= pole_at or jp <= pole_at):
            continue
        coeffs[(j, jp)] = _C_coeff(j, jp, p, reg) * prods[j] * np.conj(prods[jp])
    return AuxVector("right", coeffs, jmax)


# ----------------------------------------------------------------- contraction

def _site_kinds(N: int, parity: Parity):
    first_plus = Parity(parity) is Parity.EVEN_TOP
    return [(n % 2 == 1) == first_plus for n in range(1, N + 1)]


def _contract_left(lv: AuxVector, cache: _LaxCache, kinds, sites):
    state = {k: np.array([[c]], dtype=complex) for k, c in lv.coeffs.items() if c != 0}
    for n in sites:
        plus = kinds[n - 1]
        new = {}
        for (j, jp), op in state.items():
            for k in (j, j + 1):
                for kp in (jp, jp + 1):
                    s = cache.site_op(plus, n, j, k, jp, kp)
                    t = np.kron(op, s)
                    if (k, kp) in new:
                        new[(k, kp)] += t
                    else:
                        new[(k, kp)] = t
        state = new
    return state


def _contract_right(rv: AuxVector, cache: _LaxCache, kinds, sites, reach):
    state = {k: np.array([[c]], dtype=complex) for k, c in rv.coeffs.items() if c != 0}
    for n in sites:  # descending
        plus = kinds[n - 1]
        new = {}
        for (k, kp), op in state.items():
            for j in (k - 1, k):
                for jp in (kp - 1, kp):
                    if j < 0 or jp < 0 or j > reach(n) or jp > reach(n):
                        continue
                    s = cache.site_op(plus, n, j, k, jp, kp)
                    t = np.kron(s, op)
                    if (j, jp) in new:
                        new[(j, jp)] += t
                    else:
                        new[(j, jp)] = t
        state = new
    return state


@dataclass
class MpaNess:
    rho: np.ndarray
    raw_trace: complex
    parity: Parity


def _prepare(p: ModelParams):
    if not p.unitary:
        raise WrongRegimeError("the steady-state ansatz needs case A or case B parameters")
    lv = left_vector(p)
    rv = right_vector(p)
    return lv, rv, _LaxCache(p, p.alpha_L)


def contract_ness(
    p: ModelParams, parity=Parity.EVEN_TOP, hermiticity_tol: float = 1e-8, regularize: bool = False
) -> MpaNess:
    """Contract the ansatz into a dense ``2**N x 2**N`` density matrix.

    Left and right halves are contracted separately and joined in the
    middle, so only ``O((N+2)^2)`` blocks of size ``2**(N/2)`` are held.

    Parameters
    ----------
    regularize : bool
        At a Lax pole (``tb2(alpha_L + m eta) = 0`` for a reachable ``m``)
        return the limit of the normalized state as ``eta`` approaches the
        pole (see :func:`regularized`) instead of raising
        :class:`PoleAtSiteError`.
    """
    if regularize:
        try:
            return contract_ness(p, parity, hermiticity_tol)
        except PoleAtSiteError:
            rho = regularized(lambda q: contract_ness(q, parity, hermiticity_tol).rho, p)
            return MpaNess(rho, complex("nan"), Parity(parity))
    lv, rv, cache = _prepare(p)
    N = p.N
    kinds = _site_kinds(N, parity)
    half = (N + 1) // 2
    # After site n the walk from <L| has j <= n + 1.
    left = _contract_left(lv, cache, kinds, range(1, half + 1))
    right = _contract_right(rv, cache, kinds, range(N, half, -1), reach=lambda n: n)
    d = 2**N
    rho = np.zeros((d, d), dtype=complex)
    for key, lop in left.items():
        rop = right.get(key)
        if rop is not None:
            rho += np.kron(lop, rop)
    tr = np.trace(rho)
    rho = rho / tr
    herm = np.linalg.norm(rho - rho.conj().T)
    if herm > hermiticity_tol:
        raise NonHermitianResultError(f"normalized ansatz is not Hermitian (residual {herm:.2e})")
    return MpaNess((rho + rho.conj().T) / 2, complex(tr), Parity(parity))


def reduced_density(
    p: ModelParams, site: int = 1, parity=Parity.EVEN_TOP, regularize: bool = False
) -> np.ndarray:
    """One-site reduced density matrix of the ansatz without building the full state.

    All other sites are traced inside the transfer contraction, so the cost
    is ``O(N^3)`` scalar work instead of ``O(4^N)``.  ``regularize`` as in
    :func:`contract_ness`.
    """
    if regularize:
        try:
            return reduced_density(p, site, parity)
        except PoleAtSiteError:
            return regularized(reduced_density, p, site=site, parity=parity)
    lv, rv, cache = _prepare(p)
    N = p.N
    if not 1 <= site <= N:
        raise ValueError(f"site must be in 1..{N}")
    kinds = _site_kinds(N, parity)
    jm = N + 2
    vec = np.zeros((jm + 1, jm + 1), dtype=complex)
    for (j, jp), c in lv.coeffs.items():
        vec[j, jp] = c
    ops = None
    for n in range(1, N + 1):
        plus = kinds[n - 1]
        if n == site:
            ops = np.zeros((jm + 1, jm + 1, 2, 2), dtype=complex)
        nv = np.zeros_like(vec)
        nops = np.zeros_like(ops) if ops is not None and n > site else None
        reach = min(n, jm)
        for j in range(reach + 1):
            for jp in range(reach + 1):
                c = vec[j, jp]
                o = ops[j, jp] if nops is not None else None
                if c == 0 and (o is None or not o.any()):
                    continue
                for k in (j, j + 1):
                    for kp in (jp, jp + 1):
                        if k > jm or kp > jm:
                            continue
                        s = cache.site_op(plus, n, j, k, jp, kp)
                        if n == site:
                            ops[k, kp] += c * s
                        else:
                            tr = s[0, 0] + s[1, 1]
                            nv[k, kp] += c * tr
                            if nops is not None:
                                nops[k, kp] += o * tr
        if n == site:
            vec = np.zeros_like(vec)
        else:
            vec = nv
            if nops is not None:
                ops = nops
    R = rv.as_matrix(jm + 1)
    rho1 = np.einsum("ab,abij->ij", R, ops)
    rho1 = rho1 / np.trace(rho1)
    return (rho1 + rho1.conj().T) / 2


def _richardson(fn, p, delta, kwargs):
    unit = p.eta / abs(p.eta)
    vals = [fn(p.with_(eta=p.eta + s * delta * unit), **kwargs) for s in (1, -1, 2, -2)]
    out = (4 * (vals[0] + vals[1]) - (vals[2] + vals[3])) / 6
    return (out + out.conj().T) / 2


def regularized(fn, p: ModelParams, delta: float | None = None, return_error: bool = False, **kwargs):
    """Evaluate ``fn(p)`` at a Lax pole as the limit from nearby anisotropies.

    At ``tb2(alpha_L + m eta) = 0`` individual Lax blocks diverge while the
    normalized state stays finite.  The limit is approached with the
    fourth-order symmetric combination
    ``(4 (f(+d) + f(-d)) - (f(+2d) + f(-2d))) / 6`` with the step ``d``
    taken along the direction of ``eta``, so the regime is preserved.

    Truncation error falls like ``d**4`` but rounding grows like ``d**-2``
    (the diverging walks cancel in the normalized state), and where the two
    balance depends on the point.  Unless ``delta`` is given, steps
    ``1e-3 / 3**k`` (k = 0..7) are tried and the estimate that agrees best
    with its successor is returned; ``return_error=True`` also returns
    that difference as an error estimate.
    """
    if delta is not None:
        out = _richardson(fn, p, delta, kwargs)
        return (out, float("nan")) if return_error else out
    ests = [_richardson(fn, p, 1e-3 / 3**k, kwargs) for k in range(8)]
    diffs = [float(np.abs(a - b).max()) for a, b in zip(ests, ests[1:])]
    k = int(np.argmin(diffs))
    return (ests[k + 1], diffs[k]) if return_error else ests[k + 1]


# --------------------------------------------------------------- verification

def verify_rll(p: ModelParams, ms=range(-3, 4), conjugate: bool | None = None) -> dict:
    """Max Frobenius residuals of the three componentwise intertwining relations.

    Checked for each ``m`` in ``ms``::

        U (L_m x L'_{m+1})                 = (L'_m x L_{m+1}) U
        U (L_m x X_{m+1} + X'_m x L'_{m-1}) = (L'_m x X'_{m+1} + X_m x L_{m-1}) U
        U (X'_m x X_{m-1})                 = (X_m x X'_{m-1}) U

    and, when ``conjugate`` (default: only for unitary gates), the same with
    every 2x2 factor replaced by its adjoint.  Residuals are relative to the
    size of the left-hand side.
    """
    U = build_gate(p).entries
    if conjugate is None:
        conjugate = p.unitary
    report = {"diag": 0.0, "mixed": 0.0, "upper": 0.0}
    if conjugate:
        report.update({"diag*": 0.0, "mixed*": 0.0, "upper*": 0.0})
    a = p.alpha_L
    for m in ms:
        M0 = lax_matrices(m, p.u, p.eta, p.tau, a)
        Mp = lax_matrices(m + 1, p.u, p.eta, p.tau, a)
        Mm = lax_matrices(m - 1, p.u, p.eta, p.tau, a)
        variants = [("", lambda x: x)]
        if conjugate:
            variants.append(("*", lambda x: x.conj().T))
        for tag, f in variants:
            k = np.kron
            pairs = {
                "diag": (k(f(M0["L"]), f(Mp["Lp"])), k(f(M0["Lp"]), f(Mp["L"]))),
                "mixed": (
                    k(f(M0["L"]), f(Mp["X"])) + k(f(M0["Xp"]), f(Mm["Lp"])),
                    k(f(M0["Lp"]), f(Mp["Xp"])) + k(f(M0["X"]), f(Mm["L"])),
                ),
                "upper": (k(f(M0["Xp"]), f(Mm["X"])), k(f(M0["X"]), f(Mm["Xp"]))),
            }
            for name, (lhs, rhs) in pairs.items():
                a_ = U @ lhs
                b_ = rhs @ U
                scale = max(np.linalg.norm(a_), np.linalg.norm(b_), 1e-300)
                report[name + tag] = max(report[name + tag], float(np.linalg.norm(a_ - b_) / scale))
    report["max"] = max(report.values())
    return report


def boundary_residuals(p: ModelParams, kmax: int | None = None) -> dict:
    """Componentwise residuals of the left and right boundary equations.

    Left:  ``sum_jj' l[j,j'] (A_{jk} B_{j'k'}^dag - K_L(A'_{jk} B'_{j'k'}^dag)) = 0``
    with ``A`` from ``L^+`` and ``A'`` from ``L^-`` at site 1, for all
    ``k, k'`` in ``0..2``.  Right: the analogous sum against ``r`` with
    ``L^-`` and ``K_R(L^+)`` at site ``N``, for all ``k, k' <= N + 1``.
    Residuals are relative to the larger of the two sides per component.
    """
    lv, rv, cache = _prepare(p)
    U = build_gate(p).entries
    tL = boundary_state(p.alpha_L, p.tau).amplitudes
    tR = boundary_state(p.alpha_R, p.tau).amplitudes
    N = p.N

    def rel(x, y):
        s = max(np.linalg.norm(x), np.linalg.norm(y))
        return 0.0 if s == 0 else float(np.linalg.norm(x - y) / s)

    left = 0.0
    for k in range(3):
        for kp in range(3):
            lhs = np.zeros((2, 2), dtype=complex)
            rhs = np.zeros((2, 2), dtype=complex)
            for (j, jp), c in lv.coeffs.items():
                sp = cache.site_op(True, 1, j, k, jp, kp)
                sm = cache.site_op(False, 1, j, k, jp, kp)
                if sp is not None:
                    lhs += c * sp
                if sm is not None:
                    rhs += c * reset_channel_direct(Side.LEFT, U, tL, sm, validate=False)
            left = max(left, rel(lhs, rhs))
    right = 0.0
    kmax = N + 1 if kmax is None else kmax
    for k in range(kmax + 1):
        for kp in range(kmax + 1):
            lhs = np.zeros((2, 2), dtype=complex)
            rhs = np.zeros((2, 2), dtype=complex)
            for j in (k, k + 1):
                for jp in (kp, kp + 1):
                    c = rv[(j, jp)]
                    if c == 0:
                        continue
                    sm = cache.site_op(False, N, k, j, kp, jp)
                    sp = cache.site_op(True, N, k, j, kp, jp)
                    lhs += c * sm
                    rhs += c * reset_channel_direct(Side.RIGHT, U, tR, sp, validate=False)
            right = max(right, rel(lhs, rhs))
    return {"left": left, "right": right, "max": max(left, right)}


def schmidt_values(vec: AuxVector, size: int | None = None) -> np.ndarray:
    """Singular values of the coefficient matrix ``[c(j, j')]`` (operator Schmidt spectrum)."""
    return np.linalg.svd(vec.as_matrix(size), compute_uv=False)
