"""Tests for the exact rational-polynomial certification layer."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercurv import extrinsic, polyverify
from hypercurv.polyverify import RationalPoly


def _frac(num, den):
    return Fraction(num, den)


def test_binomial_cube_expansion():
    x = RationalPoly.variable(0, 3)
    y = RationalPoly.variable(1, 3)
    cube = (x + y) * (x + y) * (x + y)
    assert cube.sorted_terms() == [
        ((0, 3, 0), Fraction(1)),
        ((1, 2, 0), Fraction(3)),
        ((2, 1, 0), Fraction(3)),
        ((3, 0, 0), Fraction(1)),
    ]


def test_add_sub_round_trip_is_bit_exact():
    x = RationalPoly.variable(0, 2)
    y = RationalPoly.variable(1, 2)
    p = x * x * Fraction(7, 3) - y * Fraction(1, 6) + RationalPoly.const(
        Fraction(-5, 11), 2)
    r = y * y * y * Fraction(22, 7) + x
    assert ((p + r) - r).sorted_terms() == p.sorted_terms()
    assert (p - p).is_zero


def test_substitute_and_eval_agree():
    x = RationalPoly.variable(0, 2)
    y = RationalPoly.variable(1, 2)
    p = x * x * y - y * y + RationalPoly.const(Fraction(3), 2)
    pinned = p.substitute(1, RationalPoly.const(Fraction(5, 2), 2))
    for v in (Fraction(0), Fraction(-2), Fraction(7, 4)):
        assert pinned.eval((v, Fraction(99))) == p.eval((v, Fraction(5, 2)))


def test_zero_and_const_degrees():
    z = RationalPoly.zero(4)
    assert z.is_zero
    assert z.degree() == 0
    c = RationalPoly.const(Fraction(9, 2), 4)
    assert c.degree() == 0
    assert c.eval(tuple(Fraction(1) for _ in range(4))) == Fraction(9, 2)


def test_degree_cap_guards_runaway_products():
    x = RationalPoly.variable(0, 1)
    p = x
    for _ in range(11):
        p = p * x
    with pytest.raises(ValueError, match="degree cap"):
        p * x


_coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=6)
# keep each factor at degree <= 3 so triple products stay under the
# degree cap enforced by the constructor
_expvecs = st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))


@st.composite
def _polys(draw):
    terms = draw(st.lists(st.tuples(_expvecs, _coeffs), min_size=0, max_size=3))
    p = RationalPoly.zero(3)
    for exps, coeff in terms:
        mono = RationalPoly.const(coeff, 3)
        for idx, e in enumerate(exps):
            for _ in range(e):
                mono = mono * RationalPoly.variable(idx, 3)
        p = p + mono
    return p


@settings(max_examples=40, deadline=None)
@given(_polys(), _polys(), _polys())
def test_ring_laws(p, q, r):
    assert (p + q).sorted_terms() == (q + p).sorted_terms()
    assert (p * q).sorted_terms() == (q * p).sorted_terms()
    assert ((p + q) + r).sorted_terms() == (p + (q + r)).sorted_terms()
    assert ((p * q) * r).sorted_terms() == (p * (q * r)).sorted_terms()
    assert (p * (q + r)).sorted_terms() == (p * q + p * r).sorted_terms()


@settings(max_examples=40, deadline=None)
@given(_polys(), st.tuples(*[st.fractions(min_value=-3, max_value=3,
                                          max_denominator=5)] * 3))
def test_eval_is_ring_homomorphism(p, pt):
    q = p * p + p
    assert q.eval(pt) == p.eval(pt) * p.eval(pt) + p.eval(pt)


def test_registry_all_pass():
    results = polyverify.verify_all()
    assert len(results) == len(polyverify.REGISTRY) == 12
    assert {r.name for r in results} == set(polyverify.REGISTRY)
    for r in results:
        assert r.passed, r
        assert r.witness is None


def test_corrupted_record_is_caught_with_witness():
    bad = polyverify.verify_record(polyverify.corrupted_normWpm_record())
    assert not bad.passed
    assert bad.witness["point"] == ("1", "0", "0", "0")
    assert bad.witness["lhs"] == "0"
    assert bad.witness["rhs"] == "-1/6"
    assert "nonzero polynomial" in bad.detail


def test_unknown_identity_lists_known_names():
    with pytest.raises(ValueError, match="ricTFsq"):
        polyverify.verify_identity("not_a_real_identity")


def test_unknown_recipe_rejected():
    with pytest.raises(ValueError, match="unsupported recipe pattern"):
        polyverify.assemble_symbolic("garbage recipe")


def test_weyl_norm_recipe_golden():
    w = polyverify.assemble_symbolic("Wsq")
    assert w.nvars == 4
    assert w.degree() == 4
    pt = tuple(Fraction(v) for v in (1, 1, -1, -1))
    assert w.eval(pt) == Fraction(64, 3)


def test_star_pairing_recipe_vanishes_identically():
    assert polyverify.assemble_symbolic("trWstarW").is_zero


def test_minimal_recipe_agrees_on_traceless_points():
    gen = polyverify.assemble_symbolic("Wpmsq")
    mini = polyverify.assemble_symbolic("Wpmsq", minimal=True)
    pts = [
        (_frac(3, 2), _frac(-1, 3), _frac(2, 7), _frac(-3, 2) + _frac(1, 3) - _frac(2, 7)),
        (_frac(1, 1), _frac(1, 1), _frac(-1, 1), _frac(-1, 1)),
        (_frac(5, 4), _frac(-5, 4), _frac(0, 1), _frac(0, 1)),
    ]
    for pt in pts:
        assert sum(pt) == 0
        assert gen.eval(pt) == mini.eval(pt)


def test_symbolic_matches_float_layer_at_rational_points():
    rng = np.random.default_rng(7)
    recipes = {
        "S": lambda n: n.S,
        "A2sq": lambda n: n.A2sq,
        "trA3": lambda n: n.trA3,
        "trA5": lambda n: n.trA5,
        "trA6": lambda n: n.trA6,
        "Wsq": lambda n: n.Wsq,
        "Wpmsq": lambda n: n.Wpmsq,
        "ricTFsq": lambda n: n.RicTFsq,
    }
    polys = {name: polyverify.assemble_symbolic(name) for name in recipes}
    for _ in range(20):
        nums = rng.integers(-8, 9, size=4)
        dens = rng.integers(1, 7, size=4)
        pt = tuple(Fraction(int(a), int(b)) for a, b in zip(nums, dens))
        state = extrinsic.PointState(A=np.diag([float(v) for v in pt]))
        pack = extrinsic.closed_form_norms(state)
        for name, getter in recipes.items():
            exact = float(polys[name].eval(pt))
            approx = getter(pack)
            assert approx == pytest.approx(exact, rel=1e-12, abs=1e-12), name
