"""Elliptic brickwork spin helices.

Helix states are product states whose site ``n`` carries the theta ray
``psi(alpha_L + n eta + shift)``, with the shift alternating between 0 and
``+-u`` from site to site.  This module builds them, tests the boundary
conditions that make them exact steady states, measures magnetization
profiles and the two one-site helix indicators, runs anisotropy scans and
checks stationarity of helices on periodic rings.
"""

from __future__ import annotations

import enum
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .channels import QubitVector, psi_vector
from .circuit import find_ness, single_site_density, trace_distance
from .gate import PAULI, ModelParams, build_gate
from .mpa import Parity, PoleAtSiteError, reduced_density

__all__ = [
    "Chirality",
    "Geometry",
    "ClosureViolatedError",
    "HelixSpec",
    "IndicatorSample",
    "MagnetizationProfile",
    "ProductState",
    "PeriodicReport",
    "THREADS_ENV",
    "lattice_distance",
    "helix_alpha_R",
    "helix_mismatch",
    "is_helix_point",
    "psi_site",
    "helix_factors",
    "helix_state",
    "magnetization_profile",
    "target_density",
    "indicators",
    "eta_scan",
    "closure_mismatch",
    "periodic_checks",
    "bulk_relation_residuals",
]

log = logging.getLogger(__name__)

THREADS_ENV = "XYZNESS_THREADS"
_HELIX_TOL = 1e-9


class ClosureViolatedError(ValueError):
    """The ring size and anisotropy do not satisfy the periodic closure condition."""


class Chirality(str, enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> int:
        return 1 if self is Chirality.PLUS else -1


class Geometry(str, enum.Enum):
    OPEN_ODD = "open"
    PERIODIC_EVEN = "periodic"


# ------------------------------------------------------------------ conditions

def lattice_distance(z: complex, tau: complex) -> float:
    """Distance from ``z`` to the nearest point of the lattice ``2 Z + 2 tau Z``."""
    z, tau = complex(z), complex(tau)
    # z = 2 x + 2 tau y with real x, y
    y = z.imag / (2 * tau.imag)
    x = (z.real - 2 * tau.real * y) / 2
    best = np.inf
    for dx in (np.floor(x), np.ceil(x)):
        for dy in (np.floor(y), np.ceil(y)):
            best = min(best, abs(z - 2 * dx - 2 * tau * dy))
    return float(best)


def helix_alpha_R(p: ModelParams, chirality=Chirality.PLUS, kinks: int = 0) -> complex:
    """Right reset parameter at which the NESS is a helix with ``kinks`` kinks.

    ``alpha_L +- ((N + 1 - 2 kinks) eta + u)`` for the two chiralities.
    """
    s = Chirality(chirality).sign
    return p.alpha_L + s * ((p.N + 1 - 2 * kinks) * p.eta + p.u)


def helix_mismatch(p: ModelParams, chirality=Chirality.PLUS, kinks: int = 0) -> float:
    """Distance of ``alpha_R`` from the helix condition, modulo the ray lattice.

    The boundary ray of ``alpha`` is unchanged by ``alpha -> alpha + 2``,
    ``alpha -> alpha + 2 tau`` and ``alpha -> 1 - alpha``; all three are
    taken into account.
    """
    target = helix_alpha_R(p, chirality, kinks)
    return min(
        lattice_distance(p.alpha_R - target, p.tau),
        lattice_distance(1 - p.alpha_R - target, p.tau),
    )


def is_helix_point(p: ModelParams, chirality=Chirality.PLUS, kinks: int = 0, tol: float = _HELIX_TOL) -> bool:
    return helix_mismatch(p, chirality, kinks) < tol


@dataclass(frozen=True)
class HelixSpec:
    """Factorized helix description.

    ``sites`` is ``N`` (odd) for the open chain or ``M`` (even) for a ring.
    """

    alpha_L: complex
    sites: int
    chirality: Chirality = Chirality.PLUS
    kinks: int = 0
    geometry: Geometry = Geometry.OPEN_ODD

    def __post_init__(self):
        object.__setattr__(self, "alpha_L", complex(self.alpha_L))
        object.__setattr__(self, "chirality", Chirality(self.chirality))
        object.__setattr__(self, "geometry", Geometry(self.geometry))
        if self.kinks < 0:
            raise ValueError("kink count must be non-negative")
        if self.sites < 1:
            raise ValueError("a helix needs at least one site")
        want_odd = self.geometry is Geometry.OPEN_ODD
        if (self.sites % 2 == 1) != want_odd:
            raise ValueError(f"{self.geometry.value} geometry needs {'odd' if want_odd else 'even'} size")

    @classmethod
    def from_params(cls, p: ModelParams, tol: float = _HELIX_TOL, max_kinks: int | None = None) -> "HelixSpec":
        """Detect which helix or kink condition ``p`` satisfies on the open chain."""
        max_kinks = (p.N + 1) // 2 if max_kinks is None else max_kinks
        for kinks in range(max_kinks + 1):
            for ch in Chirality:
                if is_helix_point(p, ch, kinks, tol):
                    return cls(p.alpha_L, p.N, ch, kinks, Geometry.OPEN_ODD)
        raise ValueError("parameters satisfy no helix or kink condition")


# ------------------------------------------------------------------ states

def psi_site(n: int, shift: complex, alpha_L: complex, eta: complex, tau: complex) -> QubitVector:
    """Normalized ray ``(th1, th4)(alpha_L + n eta + shift)`` of helix site ``n``."""
    return QubitVector.normalize(psi_vector(complex(alpha_L) + n * complex(eta) + complex(shift), tau))


@dataclass(frozen=True)
class ProductState:
    """Tensor product of normalized single-qubit kets (site 1 first)."""

    factors: tuple

    def __len__(self):
        return len(self.factors)

    def to_vector(self) -> np.ndarray:
        if len(self.factors) > 24:
            raise MemoryError("refusing to build more than 2**24 amplitudes; work with the factors")
        v = np.ones(1, dtype=complex)
        for f in self.factors:
            v = np.kron(v, f)
        return v

    def projector(self) -> np.ndarray:
        v = self.to_vector()
        return np.outer(v, v.conj())


def _shifts(n_sites: int, chirality: Chirality, u: complex, parity) -> list:
    # Even step: no shift on odd sites, +-u on even sites; odd step swaps them.
    s = chirality.sign * u
    even = Parity(parity) is Parity.EVEN_TOP
    return [(0 if n % 2 == 1 else s) if even else (s if n % 2 == 1 else 0) for n in range(1, n_sites + 1)]


def helix_factors(spec: HelixSpec, p: ModelParams, parity=Parity.EVEN_TOP) -> ProductState:
    """Single-site factors of the helix; usable for rings far beyond dense sizes."""
    if spec.kinks:
        raise ValueError("only kink-free helices are product states")
    sign = spec.chirality.sign
    shifts = _shifts(spec.sites, spec.chirality, p.u, parity)
    return ProductState(
        tuple(
            psi_site(sign * n, sh, spec.alpha_L, p.eta, p.tau).amplitudes
            for n, sh in zip(range(1, spec.sites + 1), shifts)
        )
    )


def helix_state(spec: HelixSpec, p: ModelParams, parity=Parity.EVEN_TOP) -> np.ndarray:
    """Dense ``2**sites`` ket of a pure helix.

    ``parity='even'`` gives the state after the full period (shifts on even
    sites), ``'odd'`` the state after the half period (shifts on odd sites).
    """
    return helix_factors(spec, p, parity).to_vector()


# ------------------------------------------------------------------ profiles

@dataclass
class MagnetizationProfile:
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    parity: str = "even"

    def __len__(self):
        return len(self.sx)

    def rows(self):
        for n in range(len(self)):
            yield n + 1, float(self.sx[n]), float(self.sy[n]), float(self.sz[n]), self.parity

    def bloch_norms(self) -> np.ndarray:
        return np.sqrt(self.sx**2 + self.sy**2 + self.sz**2)


def _bloch(rho1: np.ndarray) -> tuple:
    return tuple(float(np.trace(rho1 @ PAULI[a]).real) for a in "xyz")


def magnetization_profile(state, parity: str = "even") -> MagnetizationProfile:
    """Per-site Pauli expectations.

    ``state`` may be a :class:`ProductState`, a dense ket of length ``2**N``
    or a ``2**N x 2**N`` density matrix.
    """
    if isinstance(state, ProductState):
        rhos = [np.outer(f, np.conj(f)) for f in state.factors]
    else:
        arr = np.asarray(state, dtype=complex)
        if arr.ndim == 1:
            arr = np.outer(arr, arr.conj()) / np.vdot(arr, arr).real
        n = int(round(np.log2(arr.shape[0])))
        rhos = [single_site_density(arr, i) for i in range(n)]
    xyz = np.array([_bloch(r) for r in rhos]).reshape(-1, 3)
    return MagnetizationProfile(xyz[:, 0], xyz[:, 1], xyz[:, 2], str(parity))


# ------------------------------------------------------------------ indicators

@dataclass
class IndicatorSample:
    eta: complex
    f1: float
    f2_plus: float
    f2_minus: float
    engine: str = "mpa"
    error: str | None = None
    oracle_distance: float | None = None
    rho1: np.ndarray | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.error is None


def target_density(x: complex, tau: complex) -> np.ndarray:
    """Projector onto the normalized first-site helix ray ``psi(x)``."""
    return QubitVector.normalize(psi_vector(x, tau)).projector


def indicators(rho1, alpha_L, eta, tau, squared: bool = False) -> tuple:
    """Purity deficit ``f1`` and trace distances ``f2(+eta)``, ``f2(-eta)``.

    ``f1 = 1 - tr rho1^2`` and ``f2(x) = 1/2 sum |lambda_j|`` over the
    eigenvalues of ``rho1 - rho(alpha_L + x)``.  ``squared=True`` sums
    ``|lambda_j|^2`` instead; the zeros are the same.
    """
    rho1 = np.asarray(rho1, dtype=complex)
    rho1 = (rho1 + rho1.conj().T) / 2
    f1 = float(np.clip(1.0 - np.trace(rho1 @ rho1).real, 0.0, 0.5))

    def f2(x):
        lam = np.linalg.eigvalsh(rho1 - target_density(alpha_L + x, tau))
        val = 0.5 * float(np.sum(np.abs(lam) ** 2 if squared else np.abs(lam)))
        return float(np.clip(val, 0.0, 1.0))

    return f1, f2(eta), f2(-eta)


def _site1_mpa(q: ModelParams) -> tuple:
    try:
        return reduced_density(q, 1), "mpa"
    except PoleAtSiteError:
        return reduced_density(q, 1, regularize=True), "mpa-regularized"


def _site1_oracle(q: ModelParams, tol: float) -> np.ndarray:
    res = find_ness(q, tol=tol)
    if not res.converged:
        raise RuntimeError(f"oracle did not converge (residual {res.residual:.2e})")
    return single_site_density(res.rho, 0)


def _scan_point(q: ModelParams, engine: str, check: bool, tol: float) -> IndicatorSample:
    errors = []
    rho1 = None
    used = engine
    if engine in ("mpa", "both"):
        try:
            rho1, used = _site1_mpa(q)
        except Exception as exc:  # noqa: BLE001 - recorded, scan continues with the oracle
            errors.append(f"mpa: {exc}")
            log.warning("MPA failed at eta=%s (%s); using the oracle", q.eta, exc)
    oracle_dist = None
    if rho1 is None or engine == "oracle" or check or engine == "both":
        try:
            orc = _site1_oracle(q, tol)
            if rho1 is None:
                rho1, used = orc, "oracle"
            else:
                oracle_dist = trace_distance(rho1, orc)
        except Exception as exc:  # noqa: BLE001
            errors.append(f"oracle: {exc}")
    if rho1 is None:
        nan = float("nan")
        return IndicatorSample(q.eta, nan, nan, nan, "none", "; ".join(errors))
    f1, f2p, f2m = indicators(rho1, q.alpha_L, q.eta, q.tau)
    return IndicatorSample(q.eta, f1, f2p, f2m, used, "; ".join(errors) or None, oracle_dist, rho1)


def eta_scan(
    p: ModelParams,
    etas,
    engine: str = "mpa",
    oracle_every: int = 8,
    tol: float = 1e-12,
    workers: int | None = None,
) -> list:
    """Helix indicators of the site-1 steady state along an anisotropy grid.

    The resets stay fixed at ``alpha_L`` and ``alpha_R = alpha_L + u`` while
    ``eta`` runs over ``etas`` (each value must belong to the regime of
    ``p``).  With the MPA engine, points where a Lax normalization vanishes
    are evaluated as a limit from nearby anisotropies, and any remaining
    failure falls back to the dense oracle.  Every ``oracle_every``-th point
    (0 disables it) is also cross-checked against the oracle and the site-1
    trace distance stored in ``oracle_distance``.

    Points are independent; ``workers`` (default: the ``XYZNESS_THREADS``
    environment variable, else 1) threads evaluate them.  Output order
    follows ``etas``.
    """
    if engine not in ("mpa", "oracle", "both"):
        raise ValueError(f"engine must be 'mpa', 'oracle' or 'both', got {engine!r}")
    if abs(p.alpha_R - (p.alpha_L + p.u)) > 1e-12:
        raise ValueError("scans keep the resets at alpha_R = alpha_L + u")
    if oracle_every < 0:
        raise ValueError("oracle_every must be >= 0")
    points = [p.with_(eta=complex(e)) for e in etas]
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)

    def run(k):
        check = engine == "mpa" and oracle_every > 0 and k % oracle_every == 0
        return _scan_point(points[k], engine, check, tol)

    if workers <= 1:
        return [run(k) for k in range(len(points))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(len(points))))


# ------------------------------------------------------------------ periodic rings

def closure_mismatch(p: ModelParams, M: int) -> float:
    """Distance of ``eta M`` from ``2 Z`` (real eta) or ``2 tau Z`` (imaginary eta)."""
    x = complex(p.eta) * M
    if abs(p.eta.imag) <= 1e-14:
        return float(abs(x - 2 * np.round(x.real / 2)))
    if abs(p.eta.real) <= 1e-14:
        k = np.round((x / (2 * p.tau)).real)
        return float(abs(x - 2 * k * p.tau))
    return float("inf")


def _apply_gate_ket(psi: np.ndarray, U: np.ndarray, i: int, j: int, n: int) -> np.ndarray:
    T = psi.reshape((2,) * n)
    T = np.tensordot(U.reshape(2, 2, 2, 2), T, axes=([2, 3], [i, j]))
    return np.moveaxis(T, [0, 1], [i, j]).reshape(-1)


def _ring_even(psi, U, M):
    for i in range(0, M, 2):
        psi = _apply_gate_ket(psi, U, i, i + 1, M)
    return psi


def _ring_odd(psi, U, M):
    for i in range(1, M - 1, 2):
        psi = _apply_gate_ket(psi, U, i, i + 1, M)
    return _apply_gate_ket(psi, U, M - 1, 0, M)


def _pure_td(a: np.ndarray, b: np.ndarray) -> float:
    # sqrt(1 - |<a|b>|^2) written via the phase-aligned difference, which
    # keeps full relative precision when the states nearly coincide.
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    ov = np.vdot(b, a)
    c = abs(ov)
    if c == 0:
        return 1.0
    d = np.linalg.norm(a - (ov / c) * b)
    return float(min(1.0, d * np.sqrt((1 + c) / 2)))


@dataclass
class PeriodicReport:
    M: int
    stationarity: dict
    odd_stationarity: dict
    gram_rank: int | None
    ket_span_rank: int | None = None
    gram_singular_values: np.ndarray = field(repr=False, default=None)
    conjectured_degeneracy: int = 0
    n_samples: int = 0
    n_gram_samples: int = 0

    @property
    def max_residual(self) -> float:
        return max(list(self.stationarity.values()) + list(self.odd_stationarity.values()))


def periodic_checks(
    p: ModelParams,
    M: int,
    alphas=None,
    n_alpha: int = 8,
    gram_samples: int | None = None,
    gram_threshold: float = 1e-8,
    seed: int = 0,
    closure_tol: float = _HELIX_TOL,
) -> PeriodicReport:
    """Stationarity of periodic helices and the rank of the helix family.

    For each sampled ``alpha_L`` and both chiralities the residuals
    ``|| M_per(P) - P ||_tr`` (full period, ``P`` the even-step helix
    projector) and ``|| M_even M_odd (P~) - P~ ||_tr`` with ``P~ = M_even(P)``
    are measured; the latter also checks that ``M_even(P)`` is the helix
    with the shifts swapped.

    The Gram rank of the vectorized projectors over ``gram_samples``
    (default ``4 M``) values of ``alpha_L`` per chirality is reported
    together with the rank of the span of the helix kets themselves and the
    conjectured degeneracy ``2 M``.  Nothing about the ranks is asserted.
    """
    if M % 2 or M < 2:
        raise ValueError(f"ring size must be even and >= 2, got {M}")
    err = closure_mismatch(p, M)
    if err > closure_tol:
        raise ClosureViolatedError(f"eta M = {p.eta * M} violates the closure condition (off by {err:.2e})")
    rng = np.random.default_rng(seed)

    def sample(k):
        return 2 * rng.random(k) + 2j * p.tau.imag * rng.random(k)

    alphas = sample(n_alpha) if alphas is None else np.asarray(alphas, dtype=complex)
    U = build_gate(p).entries
    stat, odd = {}, {}
    for ch in Chirality:
        r_full = r_odd = 0.0
        for a in alphas:
            spec = HelixSpec(a, M, ch, 0, Geometry.PERIODIC_EVEN)
            psi = helix_state(spec, p, Parity.EVEN_TOP)
            half = _ring_even(psi, U, M)
            full = _ring_odd(half, U, M)
            r_full = max(r_full, _pure_td(full, psi))
            swapped = helix_state(spec, p, Parity.ODD_TOP)
            back = _ring_even(_ring_odd(swapped, U, M), U, M)
            r_odd = max(r_odd, _pure_td(half, swapped), _pure_td(back, swapped))
        stat[ch.value] = r_full
        odd[ch.value] = r_odd

    rank = ket_rank = sv = None
    gram_samples = 4 * M if gram_samples is None else gram_samples
    if gram_samples > 0 and M <= 8:
        kets = []
        for ch in Chirality:
            for a in sample(gram_samples):
                kets.append(helix_state(HelixSpec(a, M, ch, 0, Geometry.PERIODIC_EVEN), p))
        kets = np.array(kets)
        projs = np.einsum("ki,kj->kij", kets, kets.conj()).reshape(len(kets), -1)
        sv = np.linalg.svd(projs, compute_uv=False)
        rank = int(np.sum(sv > gram_threshold * sv[0]))
        kv = np.linalg.svd(kets, compute_uv=False)
        ket_rank = int(np.sum(kv > gram_threshold * kv[0]))
    return PeriodicReport(M, stat, odd, rank, ket_rank, sv, 2 * M, len(alphas), 2 * gram_samples)


def bulk_relation_residuals(p: ModelParams, ns=None, seed: int = 0) -> dict:
    """Relative residuals of the two local helix intertwining relations.

    ``U (P_n(0) x P_{n+1}(u)) = (P_n(u) x P_{n+1}(0)) U`` and
    ``U (P_n(0) x P_{n-1}(-u)) = (P_n(-u) x P_{n-1}(0)) U`` with
    ``P_n(s)`` the (unnormalized) projector on ``psi(alpha_L + n eta + s)``;
    ``n`` may be any real number.
    """
    ns = np.random.default_rng(seed).uniform(-5, 5, 8) if ns is None else ns
    U = build_gate(p).entries

    def P(n, s):
        v = psi_vector(p.alpha_L + n * p.eta + s, p.tau)
        return np.outer(v, v.conj())

    out = {"rll1": 0.0, "rll2": 0.0}
    for n in ns:
        for key, (a, b, c, d) in {
            "rll1": (P(n, 0), P(n + 1, p.u), P(n, p.u), P(n + 1, 0)),
            "rll2": (P(n, 0), P(n - 1, -p.u), P(n, -p.u), P(n - 1, 0)),
        }.items():
            lhs = U @ np.kron(a, b)
            rhs = np.kron(c, d) @ U
            scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs), 1e-300)
            out[key] = max(out[key], float(np.linalg.norm(lhs - rhs) / scale))
    out["max"] = max(out.values())
    return out
