"""Model hypersurfaces of the unit 5-sphere and quadrature over them.

The catalog covers the homogeneous examples whose curvature data is known
in closed form: Clifford products S^k(sqrt(k/n)) x S^(n-k)(sqrt((n-k)/n)),
the totally geodesic equatorial sphere, and the point data of the
inhomogeneous-looking isoparametric family member with four distinct
principal curvatures cot(pi/8 + k pi/4). Product charts come with exact
per-factor quadrature rules (trapezoid on periodic angles, Gauss-Legendre
with the sine-power Jacobian folded into the weights on polar angles), so
integral functionals of the curvature converge spectrally in the
resolution.

The second fundamental form can also be extracted numerically from the
chart by central finite differences with one Richardson extrapolation
level, which serves as an oracle for the catalog spectra.
"""

from __future__ import annotations

import csv
import itertools
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss

from .extrinsic import PointState, cgb_integrand, closed_form_norms, signature_integrand

__all__ = [
    "Factor",
    "Immersion",
    "QuadratureGrid",
    "catalog_point",
    "clifford_immersion",
    "totally_geodesic_sphere",
    "get_immersion",
    "build_grid",
    "numeric_second_fundamental_form",
    "integrate",
]

_SPHERE_VOL = {1: 2.0 * math.pi, 2: 4.0 * math.pi, 3: 2.0 * math.pi ** 2}


@dataclass(frozen=True)
class Factor:
    """One chart angle with its share of the volume measure.

    kind "periodic": uniform trapezoid nodes on [0, 2 pi), exact for
    trigonometric polynomials below the resolution. kind "polar":
    Gauss-Legendre nodes mapped to [0, pi] with weight sin(x)^power.
    ``scale`` multiplies the weights (radius powers of the factor sphere).
    """

    name: str
    kind: str
    power: int = 0
    scale: float = 1.0

    def nodes_weights(self, res: int):
        if res < 2:
            raise ValueError(f"resolution must be at least 2, got {res}")
        if self.kind == "periodic":
            nodes = np.linspace(0.0, 2.0 * math.pi, res, endpoint=False)
            weights = np.full(res, 2.0 * math.pi / res * self.scale)
            return nodes, weights
        if self.kind == "polar":
            x, w = leggauss(res)
            nodes = 0.5 * math.pi * (x + 1.0)
            weights = 0.5 * math.pi * w * np.sin(nodes) ** self.power * self.scale
            return nodes, weights
        raise ValueError(f"unknown factor kind {self.kind!r}")


@dataclass(frozen=True)
class QuadratureGrid:
    """Per-factor nodes and weights of a product rule."""

    names: tuple
    nodes: tuple
    weights: tuple

    @property
    def factor_sums(self) -> tuple:
        return tuple(float(w.sum()) for w in self.weights)

    @property
    def total_weight(self) -> float:
        total = 1.0
        for s in self.factor_sums:
            total *= s
        return float(total)


@dataclass(frozen=True)
class Immersion:
    """A hypersurface of the unit 5-sphere with an optional product chart."""

    kind: str
    label: str
    n: int = 4
    k: int | None = None
    chart: object = None
    normal: object = None
    spectrum: np.ndarray | None = None
    factors: tuple = field(default_factory=tuple)
    closed: bool = True
    volume: float | None = None
    c: float = 1.0

    def point(self) -> PointState:
        if self.spectrum is None:
            raise ValueError(f"{self.label} carries no analytic spectrum")
        parallel = self.kind in ("cliffordProduct", "totallyGeodesicSphere")
        return PointState(lam=self.spectrum, c=self.c, parallel=parallel,
                          hessS=None if parallel else np.zeros((self.n, self.n)))


def _clifford_spectrum(n: int, k: int) -> np.ndarray:
    if not 1 <= k <= n - 1:
        raise ValueError(f"clifford factor dimension k must lie in 1..{n - 1}, got {k}")
    lam_k = math.sqrt((n - k) / k)
    lam_rest = -math.sqrt(k / (n - k))
    return np.array([lam_k] * k + [lam_rest] * (n - k))


_M4_SPECTRUM = np.array([1.0 / math.tan(math.pi / 8.0 + j * math.pi / 4.0) for j in range(4)])


def catalog_point(kind: str) -> PointState:
    """Pointwise curvature state of a catalog geometry.

    ``kind`` accepts "clifford:n:k", "geodesic:n", and "m4" (aliases
    "isoparametric", "m4point", "isoparametricM4Point"). Clifford and
    geodesic states are parallel; the m4 isoparametric point is not
    (its Simons identity forces |nabla A|^2 = S(S - 4) = 96 != 0), so it
    carries hessS = 0 (S is constant on the family) but no nablaA.
    """
    parts = kind.split(":")
    name = parts[0].strip().lower()
    if name == "clifford":
        if len(parts) != 3:
            raise ValueError(f"clifford kind must be 'clifford:n:k', got {kind!r}")
        n, k = int(parts[1]), int(parts[2])
        return PointState(lam=_clifford_spectrum(n, k), c=1.0, parallel=True)
    if name in ("geodesic", "totallygeodesicsphere"):
        n = int(parts[1]) if len(parts) > 1 else 4
        return PointState(lam=np.zeros(n), c=1.0, parallel=True)
    if name in ("m4", "m4point", "isoparametric", "isoparametricm4point"):
        return PointState(lam=_M4_SPECTRUM, c=1.0, parallel=False, hessS=np.zeros((4, 4)))
    raise ValueError(f"unknown catalog kind {kind!r}")


def _sphere_coords(angles, radius: float) -> np.ndarray:
    """Hyperspherical embedding of S^d(radius), d = len(angles)."""
    out = []
    sin_prod = radius
    for a in angles[:-1]:
        out.append(sin_prod * math.cos(a))
        sin_prod *= math.sin(a)
    out.append(sin_prod * math.cos(angles[-1]))
    out.append(sin_prod * math.sin(angles[-1]))
    return np.array(out)


def clifford_immersion(n: int = 4, k: int = 1) -> Immersion:
    """Clifford product S^k(sqrt(k/n)) x S^(n-k)(sqrt((n-k)/n)) in S^(n+1).

    Charts and quadrature are provided for n = 4. The normal is oriented
    so the S^k factor carries the positive principal curvature
    sqrt((n-k)/k).
    """
    if n != 4:
        raise ValueError(f"clifford_immersion charts support n = 4 only, got n = {n}")
    spectrum = _clifford_spectrum(n, k)
    r1 = math.sqrt(k / n)
    r2 = math.sqrt((n - k) / n)
    if k == 1:
        def chart(p):
            t, psi, phi, theta = p
            u = np.array([math.cos(t), math.sin(t)])
            v = _sphere_coords([psi, phi, theta], 1.0)
            return np.concatenate([r1 * u, r2 * v])

        def normal(p):
            t, psi, phi, theta = p
            u = np.array([math.cos(t), math.sin(t)])
            v = _sphere_coords([psi, phi, theta], 1.0)
            return np.concatenate([-r2 * u, r1 * v])

        factors = (
            Factor("t", "periodic", scale=r1),
            Factor("psi", "polar", power=2, scale=r2 ** 3),
            Factor("phi", "polar", power=1),
            Factor("theta", "periodic"),
        )
        volume = _SPHERE_VOL[1] * r1 * _SPHERE_VOL[3] * r2 ** 3
    elif k == 2:
        def chart(p):
            phi1, th1, phi2, th2 = p
            u = _sphere_coords([phi1, th1], 1.0)
            v = _sphere_coords([phi2, th2], 1.0)
            return np.concatenate([r1 * u, r2 * v])

        def normal(p):
            phi1, th1, phi2, th2 = p
            u = _sphere_coords([phi1, th1], 1.0)
            v = _sphere_coords([phi2, th2], 1.0)
            return np.concatenate([-r2 * u, r1 * v])

        factors = (
            Factor("phi1", "polar", power=1, scale=r1 ** 2),
            Factor("theta1", "periodic"),
            Factor("phi2", "polar", power=1, scale=r2 ** 2),
            Factor("theta2", "periodic"),
        )
        volume = _SPHERE_VOL[2] * r1 ** 2 * _SPHERE_VOL[2] * r2 ** 2
    elif k == 3:
        def chart(p):
            psi, phi, theta, t = p
            u = _sphere_coords([psi, phi, theta], 1.0)
            v = np.array([math.cos(t), math.sin(t)])
            return np.concatenate([r1 * u, r2 * v])

        def normal(p):
            psi, phi, theta, t = p
            u = _sphere_coords([psi, phi, theta], 1.0)
            v = np.array([math.cos(t), math.sin(t)])
            return np.concatenate([-r2 * u, r1 * v])

        factors = (
            Factor("psi", "polar", power=2, scale=r1 ** 3),
            Factor("phi", "polar", power=1),
            Factor("theta", "periodic"),
            Factor("t", "periodic", scale=r2),
        )
        volume = _SPHERE_VOL[3] * r1 ** 3 * _SPHERE_VOL[1] * r2
    else:
        raise ValueError(f"k must be 1, 2 or 3 for n = 4, got {k}")
    return Immersion(kind="cliffordProduct", label=f"clifford:4:{k}", n=4, k=k,
                     chart=chart, normal=normal, spectrum=spectrum,
                     factors=factors, closed=True, volume=volume)


def totally_geodesic_sphere(n: int = 4) -> Immersion:
    """Equatorial totally geodesic S^4 in S^5."""
    if n != 4:
        raise ValueError(f"totally_geodesic_sphere charts support n = 4 only, got n = {n}")

    def chart(p):
        psi1, psi2, psi3, theta = p
        v = _sphere_coords([psi1, psi2, psi3, theta], 1.0)
        return np.concatenate([v, [0.0]])

    def normal(p):
        return np.array([0.0] * 5 + [1.0])

    factors = (
        Factor("psi1", "polar", power=3),
        Factor("psi2", "polar", power=2),
        Factor("psi3", "polar", power=1),
        Factor("theta", "periodic"),
    )
    return Immersion(kind="totallyGeodesicSphere", label="geodesic:4", n=4,
                     chart=chart, normal=normal, spectrum=np.zeros(4),
                     factors=factors, closed=True, volume=8.0 * math.pi ** 2 / 3.0)


def get_immersion(label: str) -> Immersion:
    """Resolve a geometry string such as 'clifford:4:1' or 'geodesic:4'."""
    parts = label.split(":")
    name = parts[0].strip().lower()
    if name == "clifford":
        if len(parts) != 3:
            raise ValueError(f"clifford geometry must be 'clifford:n:k', got {label!r}")
        return clifford_immersion(int(parts[1]), int(parts[2]))
    if name in ("geodesic", "totallygeodesicsphere", "s4"):
        n = int(parts[1]) if len(parts) > 1 else 4
        return totally_geodesic_sphere(n)
    if name in ("m4", "m4point", "isoparametric", "isoparametricm4point"):
        raise ValueError("the isoparametric m4 family member is point-data only; "
                         "use catalog_point('m4')")
    raise ValueError(f"unknown geometry {label!r}")


def build_grid(imm: Immersion, res: int) -> QuadratureGrid:
    """Product quadrature grid at per-factor resolution ``res``."""
    if not imm.factors:
        raise ValueError(f"{imm.label} has no quadrature factors")
    pairs = [f.nodes_weights(res) for f in imm.factors]
    return QuadratureGrid(
        names=tuple(f.name for f in imm.factors),
        nodes=tuple(p[0] for p in pairs),
        weights=tuple(p[1] for p in pairs),
    )


def _first_derivatives(chart, params: np.ndarray, h: float) -> np.ndarray:
    cols = []
    for i in range(4):
        e = np.zeros(4)
        e[i] = h
        cols.append((chart(params + e) - chart(params - e)) / (2.0 * h))
    return np.stack(cols, axis=1)


def _second_derivatives(chart, params: np.ndarray, h: float, x0: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4, x0.size))
    for i in range(4):
        ei = np.zeros(4)
        ei[i] = h
        out[i, i] = (chart(params + ei) - 2.0 * x0 + chart(params - ei)) / (h * h)
        for j in range(i + 1, 4):
            ej = np.zeros(4)
            ej[j] = h
            mixed = (chart(params + ei + ej) - chart(params + ei - ej)
                     - chart(params - ei + ej) + chart(params - ei - ej)) / (4.0 * h * h)
            out[i, j] = mixed
            out[j, i] = mixed
    return out


def _shape_operator_fd(imm: Immersion, params: np.ndarray, h: float) -> np.ndarray:
    chart = imm.chart
    x0 = chart(params)
    J = _first_derivatives(chart, params, h)
    g = J.T @ J
    cond = np.linalg.cond(g)
    if cond > 1e8:
        raise ValueError(f"degenerate chart Jacobian at params {params.tolist()} "
                         f"(metric condition number {cond:.3e})")
    M = np.concatenate([x0[None, :], J.T], axis=0)
    _, sv, vt = np.linalg.svd(M)
    nu = vt[-1]
    if imm.normal is not None:
        ref = imm.normal(params)
        if float(nu @ ref) < 0.0:
            nu = -nu
    elif nu[np.argmax(np.abs(nu))] < 0.0:
        nu = -nu
    hij = np.einsum("ijd,d->ij", _second_derivatives(chart, params, h, x0), nu)
    L = np.linalg.cholesky(g)
    A = np.linalg.solve(L, np.linalg.solve(L, hij.T).T)
    return 0.5 * (A + A.T)


def numeric_second_fundamental_form(imm: Immersion, params, h: float = 1e-4,
                                    richardson: bool = True) -> np.ndarray:
    """Shape operator at a chart point by central finite differences.

    Uses step ``h`` and, when ``richardson`` is set, one Richardson
    extrapolation level combining steps h and h/2. The chart image must
    lie on the unit sphere (checked to 1e-10); a rank-deficient chart
    Jacobian (e.g. a polar axis point) is an input error reporting the
    metric condition number. The result is expressed in an orthonormal
    eigenframe-agnostic basis: compare spectra, not raw matrices.
    """
    if imm.chart is None:
        raise ValueError(f"{imm.label} is point-data only and has no chart")
    params = np.asarray(params, dtype=float)
    if params.shape != (4,):
        raise ValueError(f"params must have shape (4,), got {params.shape}")
    x0 = imm.chart(params)
    radius = float(np.linalg.norm(x0))
    if abs(radius - 1.0) > 1e-10:
        raise ValueError(f"chart image must lie on the unit sphere, |x| = {radius!r}")
    A_h = _shape_operator_fd(imm, params, h)
    if not richardson:
        return A_h
    A_half = _shape_operator_fd(imm, params, 0.5 * h)
    return (4.0 * A_half - A_h) / 3.0


_FUNCTIONAL_ALIASES = {
    "cgb": "cgbEuler",
    "cgbeuler": "cgbEuler",
    "euler": "cgbEuler",
    "weyl": "weylFunctional",
    "weylfunctional": "weylFunctional",
    "signature": "signature",
    "volume": "volume",
}


def _integrand_value(p: PointState, functional: str) -> float:
    if functional == "cgbEuler":
        return cgb_integrand(p) / (32.0 * math.pi ** 2)
    if functional == "weylFunctional":
        return closed_form_norms(p).Wsq
    if functional == "signature":
        return signature_integrand(p) / (48.0 * math.pi ** 2)
    if functional == "volume":
        return 1.0
    raise ValueError(f"unknown functional {functional!r}")


def _dump_rows(path: str, grid: QuadratureGrid, values, constant: bool):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(grid.names) + ["integrand", "weight"])
        index_iter = itertools.product(*(range(len(n)) for n in grid.nodes))
        for flat, idx in enumerate(index_iter):
            row = [grid.nodes[d][i] for d, i in enumerate(idx)]
            weight = 1.0
            for d, i in enumerate(idx):
                weight *= grid.weights[d][i]
            value = values if constant else values[flat]
            writer.writerow([repr(float(v)) for v in row]
                            + [repr(float(value)), repr(float(weight))])


def integrate(imm: Immersion, functional: str, res: int = 64,
              grid: QuadratureGrid | None = None, dump: str | None = None) -> float:
    """Integrate a curvature functional over a product-chart geometry.

    Functionals: "cgbEuler" (normalized by 32 pi^2; equals the Euler
    characteristic on closed geometries), "weylFunctional" (the plain
    integral of |W|^2), "signature" (normalized by 48 pi^2; equals the
    Hirzebruch signature), "volume". Short aliases cgb/weyl are accepted.

    Catalog geometries have constant curvature data over the chart, so
    the integrand is evaluated once and the quadrature carries the volume
    factor; non-catalog charts are evaluated per node through the finite
    difference extractor. Integrating a non-closed custom chart yields a
    local patch value only and draws a warning, since the result is not
    a topological invariant there.
    """
    functional = _FUNCTIONAL_ALIASES.get(functional.strip().lower(), functional)
    if functional not in ("cgbEuler", "weylFunctional", "signature", "volume"):
        raise ValueError(f"unknown functional {functional!r}")
    if grid is None:
        grid = build_grid(imm, res)
    if not imm.closed and functional in ("cgbEuler", "signature"):
        warnings.warn(f"{imm.label} is not closed: {functional} over the chart is a "
                      "local patch value only, not a topological invariant", stacklevel=2)
    if imm.spectrum is not None:
        value = _integrand_value(imm.point(), functional)
        if dump is not None:
            _dump_rows(dump, grid, value, constant=True)
        return value * grid.total_weight
    values = []
    for idx in itertools.product(*(range(len(n)) for n in grid.nodes)):
        params = np.array([grid.nodes[d][i] for d, i in enumerate(idx)])
        A = numeric_second_fundamental_form(imm, params)
        p = PointState(A=A, c=imm.c)
        values.append(_integrand_value(p, functional))
    values = np.array(values)
    weights = np.ones_like(values)
    pos = 0
    for idx in itertools.product(*(range(len(n)) for n in grid.nodes)):
        w = 1.0
        for d, i in enumerate(idx):
            w *= grid.weights[d][i]
        weights[pos] = w
        pos += 1
    if dump is not None:
        _dump_rows(dump, grid, values, constant=False)
    return float(np.sum(values * weights))
