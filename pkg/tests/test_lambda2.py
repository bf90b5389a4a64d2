"""Tests for the four-dimensional two-form and curvature-operator algebra."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercurv import lambda2

ATOL = 1e-12


def _rand_curv(rng, trace_free=False):
    # build a curvature tensor through the Kulkarni-Nomizu product so the
    # symmetries hold exactly; subtract the Ricci part if asked
    U = rng.normal(size=(4, 4))
    U = 0.5 * (U + U.T)
    T = lambda2.kulkarni_nomizu(U, U)
    if trace_free:
        ric = T.ricci_contraction()
        ricTF = ric - np.trace(ric) / 4.0 * np.eye(4)
        scal = np.trace(ric)
        g = np.eye(4)
        T = T - 0.5 * lambda2.kulkarni_nomizu(ricTF, g) \
            - scal / 24.0 * lambda2.kulkarni_nomizu(g, g)
    return T


def test_levi_civita_values():
    assert lambda2.levi_civita(1, 2, 3, 4) == 1
    assert lambda2.levi_civita(2, 1, 3, 4) == -1
    assert lambda2.levi_civita(1, 1, 3, 4) == 0
    assert lambda2.levi_civita(4, 3, 2, 1) == 1
    with pytest.raises(ValueError):
        lambda2.levi_civita(0, 1, 2, 3)
    with pytest.raises(ValueError):
        lambda2.levi_civita(1, 2, 3, 5)


def test_levi_civita_tensor_contractions():
    # the standard contraction ladder fixes the normalization of mu
    eps = lambda2.levi_civita_tensor()
    # full: mu_ijkl mu_ijkl = 24
    assert np.einsum("ijkl,ijkl->", eps, eps) == pytest.approx(24.0, abs=ATOL)
    # three summed: mu_ijkl mu_ijkm = 6 delta_lm
    c3 = np.einsum("ijkl,ijkm->lm", eps, eps)
    np.testing.assert_allclose(c3, 6.0 * np.eye(4), atol=ATOL)
    # two summed: mu_ijkl mu_ijmn = 2(delta_km delta_ln - delta_kn delta_lm)
    c2 = np.einsum("ijkl,ijmn->klmn", eps, eps)
    d = np.eye(4)
    expect = 2.0 * (np.einsum("km,ln->klmn", d, d) - np.einsum("kn,lm->klmn", d, d))
    np.testing.assert_allclose(c2, expect, atol=ATOL)
    # one summed: determinant expansion in deltas
    c1 = np.einsum("ijkl,imnp->jklmnp", eps, eps)
    expect1 = np.zeros((4,) * 6)
    for j, k, l, m, n, p in itertools.product(range(4), repeat=6):
        expect1[j, k, l, m, n, p] = (
            d[j, m] * (d[k, n] * d[l, p] - d[k, p] * d[l, n])
            - d[j, n] * (d[k, m] * d[l, p] - d[k, p] * d[l, m])
            + d[j, p] * (d[k, m] * d[l, n] - d[k, n] * d[l, m]))
    np.testing.assert_allclose(c1, expect1, atol=ATOL)


def test_hodge_star_basis_table():
    # *(e1^e2) = e3^e4 and cyclic partners; the sign pattern fixes the
    # orientation convention used everywhere downstream
    pairs = [((1, 2), (3, 4)), ((1, 3), (4, 2)), ((1, 4), (2, 3))]
    for (i, j), (k, l) in pairs:
        w = lambda2.TwoForm.basis(i, j)
        sw = lambda2.hodge_star(w.components)
        np.testing.assert_allclose(sw, lambda2.TwoForm.basis(k, l).components, atol=ATOL)
        # and back: the star is an involution on Lambda^2 in dim 4
        np.testing.assert_allclose(lambda2.hodge_star(sw), w.components, atol=ATOL)


def test_hodge_star_involution_random():
    rng = np.random.default_rng(11)
    for _ in range(25):
        M = rng.normal(size=(4, 4))
        w = lambda2.TwoForm(M - M.T)
        ww = lambda2.hodge_star(lambda2.hodge_star(w.components))
        np.testing.assert_allclose(ww, w.components, atol=1e-13)


@given(st.lists(st.floats(-50, 50), min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_hodge_star_isometry(coeffs):
    # |<*w, *w>| == <w, w> for any two-form
    w = np.zeros((4, 4))
    for c, (i, j) in zip(coeffs, lambda2.LAMBDA2_BASIS):
        w += c * lambda2.TwoForm.basis(i, j).components
    sw = lambda2.hodge_star(w)
    assert np.sum(sw * sw) == pytest.approx(np.sum(w * w), rel=1e-12, abs=1e-12)


def test_twoform_validation():
    with pytest.raises(ValueError):
        lambda2.TwoForm(np.eye(4))
    with pytest.raises(ValueError):
        lambda2.TwoForm(np.zeros((3, 3)))
    b = lambda2.TwoForm.basis(1, 2)
    assert b.components[0, 1] == 0.5
    assert b.components[1, 0] == -0.5
    assert b.norm_sq() == pytest.approx(0.5)


def test_curv_tensor_symmetry_validation():
    T = np.zeros((4, 4, 4, 4))
    T[0, 1, 0, 1] = 1.0   # missing the antisymmetry partners
    with pytest.raises(ValueError):
        lambda2.CurvTensor4(T)
    rng = np.random.default_rng(5)
    good = _rand_curv(rng)
    lambda2.CurvTensor4(good.components)  # should not raise


def test_operator6_round_trip():
    rng = np.random.default_rng(6)
    T = _rand_curv(rng)
    op = T.operator6()
    assert op.shape == (6, 6)
    np.testing.assert_allclose(op, op.T, atol=1e-12)
    T2 = lambda2.CurvTensor4.from_operator6(op)
    np.testing.assert_allclose(T2.components, T.components, atol=1e-12)


def test_curv_tensor_json_round_trip():
    rng = np.random.default_rng(7)
    T = _rand_curv(rng)
    T2 = lambda2.CurvTensor4.from_json(T.to_json())
    np.testing.assert_allclose(T2.components, T.components, atol=0)


def test_operator6_action_matches_tensor_action():
    # op stores raw components T_ijkl over the pair basis; the two-form
    # action tensor-contracts both slots, so its coefficients come out
    # doubled relative to the stored entries
    rng = np.random.default_rng(8)
    T = _rand_curv(rng)
    op = T.operator6()
    for a, (i, j) in enumerate(lambda2.LAMBDA2_BASIS):
        w = lambda2.TwoForm.basis(i, j).components
        acted = np.einsum("ijkl,kl->ij", T.components, w)
        # expand the image in the basis: coefficient = <acted, e_b> / <e_b, e_b>
        for b, (k, l) in enumerate(lambda2.LAMBDA2_BASIS):
            coeff = 2.0 * np.sum(acted * lambda2.TwoForm.basis(k, l).components)
            assert coeff == pytest.approx(2.0 * op[b, a], abs=1e-10)


def test_sd_asd_split_properties():
    rng = np.random.default_rng(9)
    T = _rand_curv(rng, trace_free=True)
    Tp, Tm = lambda2.sd_asd_split(T)
    np.testing.assert_allclose((Tp + Tm).components, T.components, atol=1e-11)
    np.testing.assert_allclose(lambda2.star_weyl(Tp).components, Tp.components, atol=1e-10)
    np.testing.assert_allclose(lambda2.star_weyl(Tm).components, -Tm.components, atol=1e-10)
    assert lambda2.inner(Tp, Tm) == pytest.approx(0.0, abs=1e-10)
    # norm additivity
    assert lambda2.inner(T, T) == pytest.approx(
        lambda2.inner(Tp, Tp) + lambda2.inner(Tm, Tm), rel=1e-12)


def test_sd_asd_split_rejects_trace():
    T = lambda2.kulkarni_nomizu(np.eye(4), np.eye(4))
    with pytest.raises(ValueError):
        lambda2.sd_asd_split(T)


def test_star_weyl_is_involution_on_trace_free():
    rng = np.random.default_rng(10)
    T = _rand_curv(rng, trace_free=True)
    TT = lambda2.star_weyl(lambda2.star_weyl(T))
    np.testing.assert_allclose(TT.components, T.components, atol=1e-11)


def test_kulkarni_nomizu_normalizations():
    g = np.eye(4)
    gg = lambda2.kulkarni_nomizu(g, g).components
    d = np.eye(4)
    expect = 2.0 * (np.einsum("ik,jl->ijkl", d, d) - np.einsum("il,jk->ijkl", d, d))
    np.testing.assert_allclose(gg, expect, atol=0)
    # trace identity: contraction of (U o g) is (n-2) U + tr(U) g
    rng = np.random.default_rng(12)
    U = rng.normal(size=(4, 4))
    U = 0.5 * (U + U.T)
    T = lambda2.kulkarni_nomizu(U, g)
    ric = T.ricci_contraction()
    np.testing.assert_allclose(ric, 2.0 * U + np.trace(U) * g, atol=1e-12)


def test_kulkarni_nomizu_symmetrization():
    rng = np.random.default_rng(13)
    U = rng.normal(size=(4, 4)); U = 0.5 * (U + U.T)
    V = rng.normal(size=(4, 4)); V = 0.5 * (V + V.T)
    T1 = lambda2.kulkarni_nomizu(U, V)
    T2 = lambda2.kulkarni_nomizu(V, U)
    np.testing.assert_allclose(T1.components, T2.components, atol=0)
    lambda2.CurvTensor4(T1.components)  # carries all curvature symmetries


def test_lambda2_spectrum_block_structure():
    # a KN square has equal SD and ASD spectra; eigenvalues descend
    rng = np.random.default_rng(14)
    T = _rand_curv(rng, trace_free=True)
    sp = lambda2.lambda2_spectrum(T, "plus")
    sm = lambda2.lambda2_spectrum(T, "minus")
    assert sp.shape == (3,) and sm.shape == (3,)
    assert np.all(np.diff(sp) <= 1e-12)
    with pytest.raises(ValueError):
        lambda2.lambda2_spectrum(T, "sideways")


def test_inner_and_triple_agree_with_einsum():
    rng = np.random.default_rng(15)
    T1 = _rand_curv(rng)
    T2 = _rand_curv(rng)
    a1, a2 = T1.components, T2.components
    assert lambda2.inner(T1, T2) == pytest.approx(
        float(np.einsum("ijkl,ijkl->", a1, a2)), rel=1e-13)
    assert lambda2.triple(T1, T2, T1) == pytest.approx(
        float(np.einsum("ijkl,pqkl,ijpq->", a1, a2, a1)), rel=1e-13)
