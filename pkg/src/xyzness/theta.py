"""Jacobi theta functions in the two nome conventions used by the XYZ gate.

``theta(alpha, z, tau)`` evaluates ``vartheta_alpha(pi z, q)`` with
``q = exp(2 i pi tau)`` (the "plain" functions), while
``theta_bar(alpha, z, tau)`` uses ``q = exp(i pi tau)``.  Arguments are
pi-scaled, so every function has period 2 in ``z``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Convention",
    "Nome",
    "NonConvergentError",
    "ThetaOverflowError",
    "UnknownIdentityError",
    "theta",
    "theta_bar",
    "theta_nome",
    "theta_derivative",
    "theta_bar_derivative",
    "check_theta_identity",
    "IDENTITIES",
]

_REL_CUTOFF = 1e-18
_MAX_TERMS = 512
# exp() overflows a double past ~709.
_MAX_LOG = 700.0


class NonConvergentError(ValueError):
    """Raised when Im(tau) <= 0, so the theta series diverges."""


class ThetaOverflowError(OverflowError):
    """Raised when |Im z| is too large for the series in double precision."""


class UnknownIdentityError(KeyError):
    """Raised for an identity name not in :data:`IDENTITIES`."""


class Convention(enum.Enum):
    SINGLE = 1  # q = exp(i pi tau), the "bar" functions
    DOUBLE = 2  # q = exp(2 i pi tau), the plain functions


@dataclass(frozen=True)
class Nome:
    """Modulus ``tau`` together with the nome convention."""

    tau: complex
    convention: Convention = Convention.DOUBLE

    def __post_init__(self):
        if not np.imag(self.tau) > 0:
            raise NonConvergentError(f"Im(tau) must be positive, got tau={self.tau!r}")

    @property
    def t(self) -> complex:
        """Effective modulus so that ``q = exp(i pi t)``."""
        return complex(self.tau) * self.convention.value

    @property
    def q(self) -> complex:
        return complex(np.exp(1j * np.pi * self.t))


def _n_max(t: complex, y: float) -> int:
    # Log-magnitude of term k: -pi Im(t) k^2 + 2 pi k |Im z|, with k = n or n + 1/2.
    a = np.pi * t.imag
    b = 2.0 * np.pi * y
    k0 = b / (2.0 * a)
    peak = a * k0 * k0
    if peak > _MAX_LOG:
        raise ThetaOverflowError(
            f"|Im z|={y:.3g} too large for Im(tau)={t.imag:.3g}; "
            "reduce the argument by a quasi-period first"
        )
    n_max = int(np.ceil(k0 + np.sqrt((peak - np.log(_REL_CUTOFF)) / a))) + 2
    return min(max(n_max, 4), _MAX_TERMS)


def _series(alpha: int, z, t: complex, derivative: bool) -> np.ndarray:
    if alpha not in (1, 2, 3, 4):
        raise ValueError(f"theta index must be 1..4, got {alpha}")
    if not t.imag > 0:
        raise NonConvergentError(f"Im(tau) must be positive, got effective tau={t!r}")
    z = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(z)):
        raise ValueError("theta argument must be finite")
    # Period-2 reduction of the real part (exact for all four functions).
    z = np.mod(z.real + 1.0, 2.0) - 1.0 + 1j * z.imag
    y = float(np.max(np.abs(z.imag), initial=0.0))

    n_max = _n_max(t, y)
    half = alpha in (1, 2)
    n = np.arange(0 if half else 1, n_max + 1)
    k = n + 0.5 if half else n.astype(float)
    # q^{k^2} as exp(i pi t k^2) avoids branch issues for complex tau.
    coef = 2.0 * np.exp(1j * np.pi * t * k * k)
    if alpha in (1, 4):
        coef = coef * (-1.0) ** n
    freq = 2.0 * k
    arg = np.pi * np.multiply.outer(z, freq)
    if alpha == 1:
        vals = np.cos(arg) * (np.pi * freq) if derivative else np.sin(arg)
    else:
        vals = -np.sin(arg) * (np.pi * freq) if derivative else np.cos(arg)
    out = vals @ coef
    if alpha in (3, 4) and not derivative:
        out = out + 1.0
    return out


def _magnitude(alpha: int, z: complex, t: complex) -> float:
    """Sum of the moduli of the series terms; rounding errors scale with it."""
    y = abs(complex(z).imag)
    half = alpha in (1, 2)
    n = np.arange(0 if half else 1, _n_max(t, y) + 1)
    k = n + 0.5 if half else n.astype(float)
    terms = 2.0 * np.abs(np.exp(1j * np.pi * t * k * k)) * np.cosh(2.0 * np.pi * k * y)
    return float(terms.sum() + (0.0 if half else 1.0))


def _wrap(result, z):
    if np.ndim(z) == 0:
        return complex(result)
    return result


def theta(alpha: int, z, tau: complex):
    """Plain theta function ``vartheta_alpha(pi z, exp(2 i pi tau))``."""
    return _wrap(_series(alpha, z, 2 * complex(tau), False), z)


def theta_bar(alpha: int, z, tau: complex):
    """Bar theta function ``vartheta_alpha(pi z, exp(i pi tau))``."""
    return _wrap(_series(alpha, z, complex(tau), False), z)


def theta_nome(alpha: int, z, nome: Nome):
    """Theta function for an explicit :class:`Nome`."""
    return _wrap(_series(alpha, z, nome.t, False), z)


def theta_derivative(alpha: int, z, tau: complex):
    """d/dz of :func:`theta`, by term-wise differentiation (includes the pi)."""
    return _wrap(_series(alpha, z, 2 * complex(tau), True), z)


def theta_bar_derivative(alpha: int, z, tau: complex):
    """d/dz of :func:`theta_bar`, by term-wise differentiation (includes the pi)."""
    return _wrap(_series(alpha, z, complex(tau), True), z)


# ---------------------------------------------------------------- identities

def _abs_plain(tau):
    return lambda a, z: _magnitude(a, z, 2 * tau)


def _abs_bar(tau):
    return lambda a, z: _magnitude(a, z, tau)


def _id_sum_product(args, tau):
    # th1(u) th1(v) + th4(u) th4(v) = tb4((u+v)/2) tb3((u-v)/2)
    u, v = args
    lhs = theta(1, u, tau) * theta(1, v, tau) + theta(4, u, tau) * theta(4, v, tau)
    rhs = theta_bar(4, (u + v) / 2, tau) * theta_bar(3, (u - v) / 2, tau)
    A, B = _abs_plain(tau), _abs_bar(tau)
    scale = A(1, u) * A(1, v) + A(4, u) * A(4, v) + B(4, (u + v) / 2) * B(3, (u - v) / 2)
    return lhs, rhs, scale


def _id_quartic(args, tau):
    x, y, z, w = args
    tb = theta_bar
    lhs = tb(1, x, tau) * tb(2, y, tau) * tb(3, z, tau) * tb(4, w, tau)
    r1 = (
        tb(1, (x + y + z - w) / 2, tau)
        * tb(2, (x + y - z + w) / 2, tau)
        * tb(3, (x - y + z + w) / 2, tau)
        * tb(4, (y + z + w - x) / 2, tau)
    )
    r2 = (
        tb(1, (w + x - y - z) / 2, tau)
        * tb(2, (w - x + y - z) / 2, tau)
        * tb(3, (w - x - y + z) / 2, tau)
        * tb(4, (w + x + y + z) / 2, tau)
    )
    B = _abs_bar(tau)
    scale = (
        B(1, x) * B(2, y) * B(3, z) * B(4, w)
        + B(1, (x + y + z - w) / 2) * B(2, (x + y - z + w) / 2) * B(3, (x - y + z + w) / 2) * B(4, (y + z + w - x) / 2)
        + B(1, (w + x - y - z) / 2) * B(2, (w - x + y - z) / 2) * B(3, (w - x - y + z) / 2) * B(4, (w + x + y + z) / 2)
    )
    return lhs, r1 + r2, scale


def _id_antisymmetric(args, tau):
    # th1(u) th4(v) - th1(v) th4(u) = tb2((u+v)/2) tb1((u-v)/2)
    u, v = args
    lhs = theta(1, u, tau) * theta(4, v, tau) - theta(1, v, tau) * theta(4, u, tau)
    rhs = theta_bar(2, (u + v) / 2, tau) * theta_bar(1, (u - v) / 2, tau)
    A, B = _abs_plain(tau), _abs_bar(tau)
    scale = A(1, u) * A(4, v) + A(1, v) * A(4, u) + B(2, (u + v) / 2) * B(1, (u - v) / 2)
    return lhs, rhs, scale


def _id_parity(args, tau):
    (z,) = args
    lhs = np.array([theta(a, -z, tau) for a in (1, 2, 3, 4)])
    rhs = np.array([-theta(1, z, tau)] + [theta(a, z, tau) for a in (2, 3, 4)])
    return lhs, rhs


def _id_quasi_period(args, tau):
    (z,) = args
    lhs = np.array([theta(1, z + 1, tau), theta(4, z + 1, tau)])
    rhs = np.array([-theta(1, z, tau), theta(4, z, tau)])
    return lhs, rhs


def _id_cross_nome(args, tau):
    (z,) = args
    lhs = np.array([theta_bar(a, z, 2 * tau) for a in (1, 2, 3, 4)])
    rhs = np.array([theta(a, z, tau) for a in (1, 2, 3, 4)])
    return lhs, rhs


IDENTITIES = {
    "sum_product": _id_sum_product,
    "quartic": _id_quartic,
    "antisymmetric": _id_antisymmetric,
    "parity": _id_parity,
    "quasi_period": _id_quasi_period,
    "cross_nome": _id_cross_nome,
}


def check_theta_identity(name: str, args, tau: complex, eps: float = 1e-300) -> float:
    """Relative residual ``|lhs - rhs| / (|lhs| + |rhs| + s + eps)`` of a named identity.

    For the product identities ``s`` is the same sum of products with every
    theta value replaced by the sum of the moduli of its series terms, the
    size rounding errors scale with.  It keeps the residual meaningful at
    common zeros of both sides.  The single-argument identities use ``s = 0``.

    Parameters
    ----------
    name : str
        One of :data:`IDENTITIES`.  ``sum_product`` and ``antisymmetric``
        take ``(u, v)``, ``quartic`` takes ``(x, y, z, w)``; ``parity``,
        ``quasi_period`` and ``cross_nome`` take ``(z,)``.
    args : tuple of complex
    tau : complex
        Modulus; the identities mix the plain and bar conventions at this tau.

    Returns
    -------
    float
        Zero when both sides vanish identically (e.g. ``antisymmetric`` at u = v).
    """
    try:
        fn = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentityError(name) from None
    lhs, rhs, *scale = fn(tuple(args), complex(tau))
    lhs = np.atleast_1d(lhs)
    rhs = np.atleast_1d(rhs)
    num = np.linalg.norm(lhs - rhs)
    den = np.linalg.norm(lhs) + np.linalg.norm(rhs) + (scale[0] if scale else 0.0) + eps
    return float(num / den)
