import numpy as np
import pytest
from hypothesis import example, given
from hypothesis import strategies as st

from xyzness.theta import (
    IDENTITIES,
    Convention,
    Nome,
    NonConvergentError,
    ThetaOverflowError,
    UnknownIdentityError,
    _magnitude,
    check_theta_identity,
    theta,
    theta_bar,
    theta_bar_derivative,
    theta_derivative,
    theta_nome,
)

from .oracles import theta4_series_mp, theta_mp

TAU = 0.65j
# Frozen from a 200-term mpmath partial sum at 50 digits (see oracles.theta4_series_mp).
THETA4_BAR_025 = 0.99943291067036929526718449970066212561738621615451

re_part = st.floats(-1.5, 1.5)
im_part = st.floats(-0.3, 0.3)
zs = st.builds(complex, re_part, im_part)
taus = st.builds(lambda y, x: complex(x, y), st.floats(0.3, 2.0), st.floats(-0.5, 0.5))


def test_theta1_at_zero():
    for tau in (TAU, 0.3 + 1.1j, 10j):
        assert theta(1, 0, tau) == 0
        assert theta_bar(1, 0, tau) == 0


def test_theta3_tiny_nome():
    assert abs(theta_nome(3, 0.37, Nome(10j, Convention.DOUBLE)) - 1) < 1e-25


def test_theta4_bar_frozen_value():
    assert abs(theta_bar(4, 0.25, TAU) - THETA4_BAR_025) < 1e-15
    assert abs(theta4_series_mp(0.25, TAU) - THETA4_BAR_025) < 1e-15


@given(st.integers(1, 4), zs, taus)
def test_matches_mpmath(alpha, z, tau):
    for double, fn in ((True, theta), (False, theta_bar)):
        ref = theta_mp(alpha, z, tau, double)
        assert abs(fn(alpha, z, tau) - ref) <= 1e-13 * max(1.0, abs(ref))


def test_nome_conventions_agree():
    z = 0.3 + 0.1j
    for a in range(1, 5):
        assert theta_nome(a, z, Nome(TAU)) == theta(a, z, TAU)
        assert theta_nome(a, z, Nome(TAU, Convention.SINGLE)) == theta_bar(a, z, TAU)
    assert abs(Nome(TAU, Convention.SINGLE).q - np.exp(-0.65 * np.pi)) < 1e-15


def test_vectorized():
    z = np.linspace(-1, 1, 7) + 0.05j
    out = theta(2, z, TAU)
    assert out.shape == z.shape
    assert np.allclose(out, [theta(2, x, TAU) for x in z], rtol=0, atol=1e-15)


@given(st.integers(1, 4), zs)
def test_derivatives_match_finite_difference(alpha, z):
    h = 1e-5
    for f, df in ((theta, theta_derivative), (theta_bar, theta_bar_derivative)):
        fd = (f(alpha, z + h, TAU) - f(alpha, z - h, TAU)) / (2 * h)
        assert abs(df(alpha, z, TAU) - fd) < 1e-7 * max(1, abs(fd))


@given(zs, taus)
def test_parity(z, tau):
    assert check_theta_identity("parity", (z,), tau) < 1e-13


@given(zs, taus)
def test_quasi_period(z, tau):
    assert check_theta_identity("quasi_period", (z,), tau) < 1e-13


@given(zs, taus)
def test_cross_nome(z, tau):
    assert check_theta_identity("cross_nome", (z,), tau) < 1e-13


@given(zs, zs)
def test_sum_product(u, v):
    assert check_theta_identity("sum_product", (u, v), TAU) < 1e-12


# The examples are common zeros of both sides, where only the magnitude
# scale keeps the residual finite.
@given(zs, zs)
@example(0j, 1 + 0j)
def test_antisymmetric(u, v):
    assert check_theta_identity("antisymmetric", (u, v), TAU) < 1e-12


@given(st.tuples(zs, zs, zs, zs))
@example((0j, 0j, 0j, 0.228 + 0j))
@example((0j, 1 + 0j, 1.16 + 0j, 0j))
def test_quartic(args):
    assert check_theta_identity("quartic", args, TAU) < 1e-12


def test_sum_product_at_origin():
    assert check_theta_identity("sum_product", (0, 0), TAU) < 1e-13


def test_antisymmetric_vanishes_on_diagonal():
    z = 0.21 - 0.07j
    lhs, rhs, _ = IDENTITIES["antisymmetric"]((z, z), TAU)
    assert lhs == 0
    assert rhs == 0
    assert check_theta_identity("antisymmetric", (z, z), TAU) == 0


@given(st.sampled_from([1, 2, 3, 4]), zs)
def test_magnitude_bounds_value(alpha, z):
    for t in (TAU, 2 * TAU):
        assert abs(theta_nome(alpha, z, Nome(t, Convention.SINGLE))) <= _magnitude(alpha, z, t) * (1 + 1e-14)


def test_quartic_random_tuples(rng):
    worst = 0.0
    for _ in range(20):
        args = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-0.25, 0.25, 4)
        worst = max(worst, check_theta_identity("quartic", args, TAU))
    assert worst < 1e-12


def test_errors():
    with pytest.raises(NonConvergentError):
        theta(1, 0.1, -1j)
    with pytest.raises(NonConvergentError):
        Nome(0.5)
    with pytest.raises(ValueError):
        theta(5, 0.1, TAU)
    with pytest.raises(ValueError):
        theta(1, np.inf, TAU)
    with pytest.raises(ThetaOverflowError):
        theta_bar(3, 40j, 0.1j)
    with pytest.raises(UnknownIdentityError):
        check_theta_identity("jacobi", (0.1,), TAU)
