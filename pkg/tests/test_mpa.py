import numpy as np
import pytest

from xyzness.circuit import find_ness, ness_n1_eigensolve, single_site_density, trace_distance
from xyzness.gate import ModelParams, Regime
from xyzness.helix import Chirality, HelixSpec, helix_alpha_R, helix_state
from xyzness.mpa import (
    LaxKind,
    Parity,
    PoleAtSiteError,
    PoleInBError,
    WrongRegimeError,
    boundary_residuals,
    contract_ness,
    lax_block,
    lax_matrices,
    left_vector,
    reduced_density,
    regularized,
    right_vector,
    schmidt_values,
    verify_rll,
)

from .conftest import AL4, TAU, generic_params, random_unitary_params


def _case_b_chain(N=3, shift=0.05):
    return ModelParams(0.185j, 0.3, TAU, AL4, AL4 + 0.185j + shift, N, "B")


def test_blocks_are_rank_one():
    p = _case_b_chain()
    for kind in LaxKind:
        for n in range(1, 4):
            for j in range(3):
                for off in (0, 1):
                    s = np.linalg.svd(lax_block(kind, n, j, p, offset=off), compute_uv=False)
                    assert s[1] < 1e-13 * max(1, s[0])
    assert not lax_block("+", 1, 0, p, offset=2).any()


def test_conjugate_kinds():
    p = _case_b_chain()
    for n, j, off in ((1, 0, 0), (2, 1, 1), (3, 1, 0)):
        for plain, conj in (("+", "+*"), ("-", "-*")):
            A = lax_block(plain, n, j, p, offset=off)
            assert np.array_equal(lax_block(conj, n, j, p, offset=off), A.conj().T)


def test_lax_pairs_collapse_at_zero_u():
    for m in range(-3, 4):
        M = lax_matrices(m, 0, 0.3, TAU, AL4)
        assert np.abs(M["L"] - M["Xp"]).max() < 1e-15
        assert np.abs(M["Lp"] - M["X"]).max() < 1e-15


def test_pole_detection():
    with pytest.raises(PoleAtSiteError) as info:
        lax_matrices(5, 0.1j, 0.1, TAU, 0.0)
    assert info.value.m == 5


def test_left_vector():
    lv = left_vector(_case_b_chain())
    assert lv[(0, 0)] == 1
    assert lv[(1, 0)] == np.conj(lv[(0, 1)])
    s = schmidt_values(lv)
    assert s[1] > 1e-6
    flat = left_vector(ModelParams(0, 0.3, TAU, AL4, AL4, 3, "B"))
    assert np.allclose(flat.as_matrix(), np.ones((2, 2)), atol=1e-14)
    assert schmidt_values(flat)[1] < 1e-14
    # case A counterpart
    lva = left_vector(generic_params("A", 3))
    assert lva[(1, 0)] == np.conj(lva[(0, 1)])


def test_right_vector_helix_and_kink():
    p = _case_b_chain(7, 0)
    helix = p.with_(alpha_R=helix_alpha_R(p))
    rv = right_vector(helix)
    assert rv.support == {(0, 0)}
    assert abs(rv[(0, 0)] - 1) < 1e-14
    kink = p.with_(alpha_R=helix_alpha_R(p, kinks=1))
    assert right_vector(kink).support == {(0, 0), (0, 1), (1, 0), (1, 1)}
    gen = right_vector(_case_b_chain(5))
    assert max(max(k) for k in gen.support) == 7
    assert schmidt_values(gen)[1] > 1e-6


def test_right_vector_pole():
    p = _case_b_chain(5, 0)
    minus = p.with_(alpha_R=helix_alpha_R(p, Chirality.MINUS))
    with pytest.raises(PoleInBError):
        right_vector(minus, renormalize=False)
    rv = right_vector(minus)
    assert rv.support and min(min(k) for k in rv.support) > 0


@pytest.mark.parametrize("p", [_case_b_chain(), generic_params("A", 3)], ids=["B", "A"])
def test_rll(p):
    assert verify_rll(p, range(-3, 4))["max"] < 1e-10


def test_rll_trivial_at_zero_u():
    assert verify_rll(ModelParams(0, 0.3, TAU, AL4, AL4, 3, "B"))["max"] < 1e-15


def test_rll_off_the_unitary_manifold():
    p = ModelParams(0.13 + 0.07j, 0.21 + 0.11j, TAU, 0.3 + 0.05j, 0.1, 3)
    assert p.regime is Regime.GENERAL
    rep = verify_rll(p)
    assert "diag*" not in rep
    assert rep["max"] < 1e-9


def test_rll_random_points(rng):
    for _ in range(10):
        assert verify_rll(random_unitary_params(rng), range(-4, 5))["max"] < 1e-10


@pytest.mark.parametrize("N", [3, 5, 7])
def test_boundary_equations(N):
    for p in (_case_b_chain(N), generic_params("A", N)):
        r = boundary_residuals(p)
        assert r["left"] < 1e-10
        assert r["right"] < 1e-9


@pytest.mark.parametrize("N", [1, 3, 5])
@pytest.mark.parametrize("regime", ["A", "B"])
def test_contract_matches_oracle(N, regime):
    p = generic_params(regime, N)
    mpa = contract_ness(p).rho
    assert abs(np.trace(mpa) - 1) < 1e-13
    assert trace_distance(mpa, find_ness(p).rho) < 1e-8


def test_n1_closed_form():
    p = _case_b_chain(1)
    assert trace_distance(contract_ness(p).rho, ness_n1_eigensolve(p)) < 1e-10


def test_odd_parity_matches_oracle():
    p = _case_b_chain(3)
    res = find_ness(p, odd=True)
    assert trace_distance(contract_ness(p, Parity.ODD_TOP).rho, res.rho_odd) < 1e-8


def test_helix_fidelity():
    p = _case_b_chain(7, 0)
    p = p.with_(alpha_R=helix_alpha_R(p))
    psi = helix_state(HelixSpec.from_params(p), p)
    rho = contract_ness(p).rho
    assert np.vdot(psi, rho @ psi).real > 1 - 1e-10


@pytest.mark.parametrize("site", [1, 2, 5])
def test_reduced_density_is_partial_trace(site):
    p = _case_b_chain(5)
    rho = contract_ness(p).rho
    assert np.abs(reduced_density(p, site) - single_site_density(rho, site - 1)).max() < 1e-12
    odd = contract_ness(p, Parity.ODD_TOP).rho
    assert np.abs(reduced_density(p, site, Parity.ODD_TOP) - single_site_density(odd, site - 1)).max() < 1e-12


def test_regularized_limit_at_pole():
    # alpha_L = 0 and 5 eta = 1/2: the site-1 Lax normalization vanishes at N = 5.
    p = ModelParams(0.185j, 0.1, TAU, 0, 0.185j, 5, "B")
    with pytest.raises(PoleAtSiteError):
        contract_ness(p)
    reg = contract_ness(p, regularize=True).rho
    assert trace_distance(reg, find_ness(p).rho) < 1e-8
    r1 = reduced_density(p, 1, regularize=True)
    assert trace_distance(r1, single_site_density(reg, 0)) < 1e-8
    r2, err = regularized(reduced_density, p, return_error=True, site=1)
    assert np.array_equal(r1, r2)
    assert 0 < err < 1e-8


def test_wrong_regime():
    p = ModelParams.infer(0.1 + 0.1j, 0.3, TAU)
    with pytest.raises(WrongRegimeError):
        left_vector(p)
    with pytest.raises(WrongRegimeError):
        contract_ness(p)
    with pytest.raises(ValueError):
        reduced_density(_case_b_chain(), 4)
