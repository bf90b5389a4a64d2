"""Tests for catalog immersions, quadrature and shape-operator extraction."""

import csv
import dataclasses
import math

import numpy as np
import pytest

from hypercurv import extrinsic, immersions

PI = math.pi
SQRT3 = math.sqrt(3.0)


# ----------------------------------------------------------------- catalog


def test_catalog_point_spectra():
    st = immersions.catalog_point("clifford:4:2")
    np.testing.assert_allclose(np.sort(st.lam), [-1, -1, 1, 1], atol=1e-14)
    assert st.parallel
    st = immersions.catalog_point("clifford:4:1")
    np.testing.assert_allclose(np.sort(st.lam)[::-1],
                               [SQRT3, -1 / SQRT3, -1 / SQRT3, -1 / SQRT3], atol=1e-12)
    st = immersions.catalog_point("geodesic:4")
    np.testing.assert_allclose(st.lam, 0.0, atol=0)
    assert st.parallel


def test_catalog_point_m4():
    # the four principal curvatures cot(pi/8 + j pi/4): paired opposites,
    # S = 12 and H = 0, but the second fundamental form is not parallel
    st = immersions.catalog_point("m4")
    expect = sorted([1 + math.sqrt(2), math.sqrt(2) - 1,
                     1 - math.sqrt(2), -1 - math.sqrt(2)], reverse=True)
    np.testing.assert_allclose(st.lam, expect, rtol=1e-12)
    assert st.H == pytest.approx(0.0, abs=1e-12)
    assert st.S == pytest.approx(12.0, rel=1e-12)
    assert not st.parallel


def test_clifford_mirror_symmetry():
    # k and n-k give the same geometry with the normal flipped
    a = immersions.catalog_point("clifford:4:1").lam
    b = immersions.catalog_point("clifford:4:3").lam
    np.testing.assert_allclose(np.sort(a), np.sort(-b), atol=1e-12)


def test_get_immersion_errors():
    with pytest.raises(ValueError):
        immersions.get_immersion("torus:7")
    with pytest.raises(ValueError):
        immersions.get_immersion("clifford:4:0")
    with pytest.raises(ValueError):
        immersions.get_immersion("m4")   # point data only, no chart
    with pytest.raises(ValueError):
        immersions.catalog_point("nope")


def test_catalog_volumes():
    assert immersions.get_immersion("clifford:4:1").volume == pytest.approx(
        3 * SQRT3 / 4 * PI**3, rel=1e-14)
    assert immersions.get_immersion("clifford:4:2").volume == pytest.approx(
        4 * PI**2, rel=1e-14)
    assert immersions.get_immersion("geodesic:4").volume == pytest.approx(
        8 * PI**2 / 3, rel=1e-14)


def test_charts_land_on_unit_sphere():
    rng = np.random.default_rng(61)
    for label in ("clifford:4:1", "clifford:4:2", "clifford:4:3", "geodesic:4"):
        imm = immersions.get_immersion(label)
        for _ in range(5):
            params = np.array([rng.uniform(0.3, 2.8) for _ in imm.factors])
            x = imm.chart(params)
            assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)
            nu = imm.normal(params)
            assert np.linalg.norm(nu) == pytest.approx(1.0, abs=1e-12)
            # the normal is tangent to the sphere and normal to the chart
            assert np.dot(x, nu) == pytest.approx(0.0, abs=1e-12)


# -------------------------------------------------------------- quadrature


def test_quadrature_volumes_match_closed_forms():
    for label in ("clifford:4:1", "clifford:4:2", "geodesic:4"):
        imm = immersions.get_immersion(label)
        v = immersions.integrate(imm, "volume", res=24)
        assert v == pytest.approx(imm.volume, rel=1e-12), label


def test_quadrature_grid_structure():
    imm = immersions.get_immersion("clifford:4:2")
    grid = immersions.build_grid(imm, 8)
    assert len(grid.nodes) == 4 and len(grid.weights) == 4
    assert all(len(n) == 8 for n in grid.nodes)
    assert grid.total_weight == pytest.approx(imm.volume, rel=1e-12)
    with pytest.raises(ValueError):
        immersions.build_grid(imm, 1)


def test_euler_characteristics():
    assert immersions.integrate(immersions.get_immersion("clifford:4:1"),
                                "cgbEuler", res=16) == pytest.approx(0.0, abs=1e-10)
    assert immersions.integrate(immersions.get_immersion("clifford:4:2"),
                                "cgbEuler", res=16) == pytest.approx(4.0, rel=1e-10)
    assert immersions.integrate(immersions.get_immersion("geodesic:4"),
                                "cgbEuler", res=16) == pytest.approx(2.0, rel=1e-10)


def test_signatures_vanish():
    for label in ("clifford:4:1", "clifford:4:2", "geodesic:4"):
        imm = immersions.get_immersion(label)
        assert immersions.integrate(imm, "signature", res=16) == pytest.approx(
            0.0, abs=1e-10)


def test_weyl_functional_clifford_22():
    imm = immersions.get_immersion("clifford:4:2")
    v = immersions.integrate(imm, "weylFunctional", res=16)
    assert v == pytest.approx(64.0 / 3.0 * PI**2 * 4, rel=1e-12)


def test_functional_aliases_and_errors():
    imm = immersions.get_immersion("clifford:4:2")
    assert immersions.integrate(imm, "cgb", res=8) == pytest.approx(
        immersions.integrate(imm, "cgbEuler", res=8))
    assert immersions.integrate(imm, "weyl", res=8) == pytest.approx(
        immersions.integrate(imm, "weylFunctional", res=8))
    with pytest.raises(ValueError):
        immersions.integrate(imm, "entropy", res=8)


def test_dump_csv_columns():
    imm = immersions.get_immersion("clifford:4:1")
    path = "/tmp/hypercurv_test_nodes.csv"
    immersions.integrate(imm, "cgb", res=3, dump=path)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    assert header == [f.name for f in imm.factors] + ["integrand", "weight"]
    assert len(body) == 3 ** 4
    # row weights reproduce the grid total exactly (the grid itself only
    # approximates the volume at this resolution)
    grid = immersions.build_grid(imm, 3)
    total = sum(float(r[-1]) for r in body)
    assert total == pytest.approx(grid.total_weight, rel=1e-12)
    # constant integrand on a catalog geometry
    vals = {r[-2] for r in body}
    assert len(vals) == 1


# -------------------------------------------- finite-difference extraction


def test_numeric_second_fundamental_form_matches_spectra():
    rng = np.random.default_rng(62)
    for label in ("clifford:4:1", "clifford:4:2", "geodesic:4"):
        imm = immersions.get_immersion(label)
        exact = np.sort(np.asarray(imm.spectrum, dtype=float))[::-1]
        for _ in range(2):
            params = np.array([
                rng.uniform(0.5, 5.5) if f.kind == "periodic" else rng.uniform(0.6, PI - 0.6)
                for f in imm.factors])
            A = immersions.numeric_second_fundamental_form(imm, params)
            lam = np.sort(np.linalg.eigvalsh(A))[::-1]
            np.testing.assert_allclose(lam, exact, atol=5e-7)


def test_numeric_extraction_richardson_beats_plain():
    # at h = 1e-3 the h^2 truncation term dominates roundoff, which is
    # the regime the extrapolation is supposed to cancel
    imm = immersions.get_immersion("clifford:4:2")
    params = np.array([0.9, 1.3, 1.1, 2.0])
    exact = np.sort(np.asarray(imm.spectrum, dtype=float))[::-1]
    plain = immersions.numeric_second_fundamental_form(imm, params, h=1e-3,
                                                       richardson=False)
    rich = immersions.numeric_second_fundamental_form(imm, params, h=1e-3,
                                                      richardson=True)
    err_plain = np.abs(np.sort(np.linalg.eigvalsh(plain))[::-1] - exact).max()
    err_rich = np.abs(np.sort(np.linalg.eigvalsh(rich))[::-1] - exact).max()
    assert err_rich < err_plain
    assert err_plain < 1e-4


def test_per_node_fd_integration_agrees_with_constant_fold():
    # wiping the analytic spectrum forces the per-node extraction branch;
    # low resolution keeps the node count manageable
    imm = immersions.get_immersion("clifford:4:2")
    custom = dataclasses.replace(imm, spectrum=None)
    folded = immersions.integrate(imm, "cgbEuler", res=3)
    extracted = immersions.integrate(custom, "cgbEuler", res=3)
    assert extracted == pytest.approx(folded, abs=1e-6)


def test_non_closed_chart_warns_on_topological_functionals():
    imm = immersions.get_immersion("clifford:4:2")
    patch = dataclasses.replace(imm, closed=False)
    with pytest.warns(UserWarning, match="local patch"):
        immersions.integrate(patch, "cgbEuler", res=3)


def test_point_requires_spectrum():
    imm = immersions.get_immersion("clifford:4:2")
    broken = dataclasses.replace(imm, spectrum=None)
    with pytest.raises(ValueError):
        broken.point()
