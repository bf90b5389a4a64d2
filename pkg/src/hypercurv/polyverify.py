"""Exact certification of the closed-form curvature identities.

Every scalar identity used elsewhere in the package is a polynomial
statement in the principal curvatures (and, where it appears, the ambient
curvature c), because a symmetric shape operator can be diagonalized
pointwise and every quantity involved is frame-invariant. Verifying an
identity therefore reduces to expanding both sides over the rationals in
diagonal variables l1..ln and checking that the difference is the zero
polynomial. That is a proof, not a numerical test: no sampling, no
tolerance.

The diagonal-A reduction is the only analytic step taken on faith here,
and it is spot-checked in floating point against non-diagonal shape
operators by the test suite.

Identities marked "minimal" are certified on the constraint surface
H = 0 by eliminating the last variable, ln := -(l1 + ... + l(n-1)),
before the zero test.

A failing identity is reported with a rational witness point and the
exact values of both sides there. The certifier treats the stated
polynomial as the claim under test; a failure therefore points at the
source statement, and is reported rather than auto-corrected.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "RationalPoly",
    "IdentityRecord",
    "VerifyResult",
    "REGISTRY",
    "assemble_symbolic",
    "verify_identity",
    "verify_record",
    "verify_all",
    "corrupted_normWpm_record",
]

_DEGREE_CAP = 12


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"rational coefficient expected, got {type(x).__name__}")


class RationalPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Terms map exponent tuples to nonzero Fractions. Total degree is
    capped at 12, enough for every registered identity; exceeding the cap
    means an assembly bug, so it raises. Instances are immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = _frac(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not match nvars = {nvars}")
            if sum(exps) > _DEGREE_CAP:
                raise ValueError(f"degree cap {_DEGREE_CAP} exceeded by term {exps}")
            clean[exps] = coeff
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "RationalPoly":
        return cls(nvars, {})

    @classmethod
    def const(cls, value, nvars: int) -> "RationalPoly":
        return cls(nvars, {tuple([0] * nvars): _frac(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "RationalPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars = {nvars}")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def sorted_terms(self):
        """Canonical graded-lexicographic term order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def _coerce(self, other):
        if isinstance(other, RationalPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        return RationalPoly.const(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return RationalPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            coeff = _frac(other)
            if coeff == 0:
                return RationalPoly.zero(self.nvars)
            return RationalPoly(self.nvars, {e: c * coeff for e, c in self.terms.items()})
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return RationalPoly.zero(self.nvars)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, Fraction(0)) + c1 * c2
                if acc == 0:
                    terms.pop(exps, None)
                else:
                    terms[exps] = acc
        return RationalPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = RationalPoly.const(1, self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def substitute(self, index: int, replacement: "RationalPoly") -> "RationalPoly":
        """Replace variable ``index`` by a polynomial (same variable space)."""
        replacement = self._coerce(replacement)
        out = RationalPoly.zero(self.nvars)
        powers = {0: RationalPoly.const(1, self.nvars)}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e not in powers:
                powers[e] = replacement ** e
            rest = list(exps)
            rest[index] = 0
            mono = RationalPoly(self.nvars, {tuple(rest): coeff})
            out = out + mono * powers[e]
        return out

    def eval(self, point) -> Fraction:
        values = [_frac(v) for v in point]
        if len(values) != self.nvars:
            raise ValueError(f"point has {len(values)} coordinates, expected {self.nvars}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def __eq__(self, other):
        return (isinstance(other, RationalPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, tuple(self.sorted_terms())))

    def __repr__(self):
        if not self.terms:
            return "RationalPoly(0)"
        bits = []
        for exps, coeff in self.sorted_terms()[:8]:
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                            for i, e in enumerate(exps) if e)
            bits.append(f"{coeff}{'*' + mono if mono else ''}")
        suffix = " + ..." if len(self.terms) > 8 else ""
        return "RationalPoly(" + " + ".join(bits) + suffix + ")"


def _eps4(i, j, k, l) -> int:
    perm = (i, j, k, l)
    if len(set(perm)) != 4:
        return 0
    sign = 1
    p = list(perm)
    for a in range(4):
        for b in range(a + 1, 4):
            if p[a] > p[b]:
                sign = -sign
    return sign


def _zero_t4(n: int, nv: int):
    z = RationalPoly.zero(nv)
    return [[[[z for _ in range(n)] for _ in range(n)] for _ in range(n)] for _ in range(n)]


def _kn(U, V, n: int, nv: int):
    T = _zero_t4(n, nv)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    T[i][j][k][l] = (U[i][k] * V[j][l] + U[j][l] * V[i][k]
                                     - U[i][l] * V[j][k] - U[j][k] * V[i][l])
    return T


def _kn_sym(U, V, n: int, nv: int):
    half = Fraction(1, 2)
    A = _kn(U, V, n, nv)
    B = _kn(V, U, n, nv)
    return [[[[(A[i][j][k][l] + B[i][j][k][l]) * half
               for l in range(n)] for k in range(n)] for j in range(n)] for i in range(n)]


def _t4_combine(parts, n: int):
    """Linear combination sum(scale * T) with polynomial scales."""
    out = None
    for scale, T in parts:
        term = [[[[T[i][j][k][l] * scale for l in range(n)] for k in range(n)]
                 for j in range(n)] for i in range(n)]
        if out is None:
            out = term
        else:
            out = [[[[out[i][j][k][l] + term[i][j][k][l] for l in range(n)]
                     for k in range(n)] for j in range(n)] for i in range(n)]
    return out


def _diag(entries, n: int, nv: int):
    z = RationalPoly.zero(nv)
    return [[entries[i] if i == j else z for j in range(n)] for i in range(n)]


def _eye(n: int, nv: int):
    return _diag([RationalPoly.const(1, nv) for _ in range(n)], n, nv)


def _star4_sym(T, nv: int):
    half = Fraction(1, 2)
    out = _zero_t4(4, nv)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    acc = RationalPoly.zero(nv)
                    for r in range(4):
                        for s in range(4):
                            e = _eps4(i, j, r, s)
                            if e and T[r][s][k][l].terms:
                                acc = acc + T[r][s][k][l] * e
                    out[i][j][k][l] = acc * half
    return out


def _inner4(T1, T2, n: int, nv: int) -> RationalPoly:
    acc = RationalPoly.zero(nv)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    a = T1[i][j][k][l]
                    if not a.terms:
                        continue
                    b = T2[i][j][k][l]
                    if not b.terms:
                        continue
                    acc = acc + a * b
    return acc


def _triple4(T1, T2, T3, nv: int) -> RationalPoly:
    # T1_ijkl T2_pqkl T3_ijpq, exploiting sparsity of diagonal-A tensors.
    by_kl: dict = {}
    for p in range(4):
        for q in range(4):
            for k in range(4):
                for l in range(4):
                    poly = T2[p][q][k][l]
                    if poly.terms:
                        by_kl.setdefault((k, l), []).append((p, q, poly))
    acc = RationalPoly.zero(nv)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    a = T1[i][j][k][l]
                    if not a.terms:
                        continue
                    for p, q, b in by_kl.get((k, l), ()):
                        c = T3[i][j][p][q]
                        if c.terms:
                            acc = acc + a * b * c
    return acc


def _lam_vars(n: int, nv: int):
    return [RationalPoly.variable(i, nv) for i in range(n)]


def _power_sums(lams, nv: int):
    H = RationalPoly.zero(nv)
    S = RationalPoly.zero(nv)
    t3 = RationalPoly.zero(nv)
    t4 = RationalPoly.zero(nv)
    t5 = RationalPoly.zero(nv)
    t6 = RationalPoly.zero(nv)
    for lam in lams:
        l2 = lam * lam
        l3 = l2 * lam
        H = H + lam
        S = S + l2
        t3 = t3 + l3
        t4 = t4 + l2 * l2
        t5 = t5 + l3 * l2
        t6 = t6 + l3 * l3
    return {"H": H, "S": S, "trA3": t3, "A2sq": t4, "trA5": t5, "trA6": t6}


def _weyl4(lams, nv: int):
    """H-general Weyl tensor of a diagonal shape operator, n = 4."""
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    A = _diag(lams, 4, nv)
    A2 = _diag([l * l for l in lams], 4, nv)
    I = _eye(4, nv)
    half = RationalPoly.const(Fraction(1, 2), nv)
    return _t4_combine([
        (half, _kn(A, A, 4, nv)),
        (H * Fraction(-1, 2), _kn_sym(A, I, 4, nv)),
        (half, _kn_sym(A2, I, 4, nv)),
        ((H * H - S) * Fraction(1, 12), _kn(I, I, 4, nv)),
    ], 4)


def _weyl4_pm(lams, nv: int):
    W = _weyl4(lams, nv)
    SW = _star4_sym(W, nv)
    half = Fraction(1, 2)
    Wp = [[[[(W[i][j][k][l] + SW[i][j][k][l]) * half for l in range(4)]
            for k in range(4)] for j in range(4)] for i in range(4)]
    Wm = [[[[(W[i][j][k][l] - SW[i][j][k][l]) * half for l in range(4)]
            for k in range(4)] for j in range(4)] for i in range(4)]
    return Wp, Wm


def _ric_tf_entries(lams, nv: int):
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    shift = (H * H - S) * Fraction(1, 4)
    return [H * lam - lam * lam - shift for lam in lams]


def _wpm_closed(lams, nv: int) -> RationalPoly:
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    return (S * S * Fraction(7, 6) + (H ** 2) * (H ** 2) * Fraction(1, 6)
            - ps["A2sq"] * 2 + H * ps["trA3"] * 2 - H * H * S * Fraction(4, 3))


def _eliminate_last(poly: RationalPoly, n: int) -> RationalPoly:
    rep = RationalPoly.zero(poly.nvars)
    for i in range(n - 1):
        rep = rep - RationalPoly.variable(i, poly.nvars)
    return poly.substitute(n - 1, rep)


@dataclass(frozen=True)
class IdentityRecord:
    """One registered identity: a builder of exact (lhs, rhs) pairs.

    Builders return fully constrained component pairs: identities with
    constraint "minimal" are assembled H-general and then restricted to
    the trace-free surface by eliminating the last curvature variable.
    """

    name: str
    constraint: str
    description: str
    build: object


def _build_normWpm(rhs_seven_sixths=Fraction(7, 6)):
    nv = 4
    lams = _lam_vars(4, nv)
    Wp, Wm = _weyl4_pm(lams, nv)
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    rhs = (S * S * rhs_seven_sixths + (H ** 2) * (H ** 2) * Fraction(1, 6)
           - ps["A2sq"] * 2 + H * ps["trA3"] * 2 - H * H * S * Fraction(4, 3))
    return [
        (_inner4(Wp, Wp, 4, nv), rhs),
        (_inner4(Wm, Wm, 4, nv), rhs),
    ]


def _build_normW():
    nv = 4
    lams = _lam_vars(4, nv)
    W = _weyl4(lams, nv)
    return [(_inner4(W, W, 4, nv), _wpm_closed(lams, nv) * 2)]


def _build_ricTFsq():
    nv = 4
    lams = _lam_vars(4, nv)
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    lhs = RationalPoly.zero(nv)
    for r in _ric_tf_entries(lams, nv):
        lhs = lhs + r * r
    rhs = (ps["A2sq"] - S * S * Fraction(1, 4) + H * H * S * Fraction(3, 2)
           - H * ps["trA3"] * 2 - (H ** 2) * (H ** 2) * Fraction(1, 4))
    return [(lhs, rhs)]


def _build_cgb():
    # c is carried as the fifth variable.
    nv = 5
    lams = _lam_vars(4, nv)
    c = RationalPoly.variable(4, nv)
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    W = _weyl4(lams, nv)
    ric_sq = RationalPoly.zero(nv)
    for r in _ric_tf_entries(lams, nv):
        ric_sq = ric_sq + r * r
    R = c * 12 + H * H - S
    lhs = _inner4(W, W, 4, nv) - ric_sq * 2 + R * R * Fraction(1, 6)
    rhs = (S * S * 3 - ps["A2sq"] * 6 - H * H * S * 6 + (H ** 2) * (H ** 2)
           + H * ps["trA3"] * 8 + c * (c * 6 - S + H * H) * 4)
    return [(lhs, rhs)]


def _build_fialkow():
    nv = 4
    lams = _lam_vars(4, nv)
    W = _weyl4(lams, nv)
    ps = _power_sums(lams, nv)
    S = ps["S"]
    A = _diag(lams, 4, nv)
    F = _diag([(lam * lam - S * Fraction(1, 6)) * Fraction(1, 2) for lam in lams], 4, nv)
    I = _eye(4, nv)
    rhs = _t4_combine([
        (RationalPoly.const(Fraction(1, 2), nv), _kn(A, A, 4, nv)),
        (RationalPoly.const(1, nv), _kn_sym(F, I, 4, nv)),
    ], 4)
    pairs = []
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    pairs.append((_eliminate_last(W[i][j][k][l], 4),
                                  _eliminate_last(rhs[i][j][k][l], 4)))
    return pairs


def _build_cubic_contraction():
    nv = 4
    lams = _lam_vars(4, nv)
    W = _weyl4(lams, nv)
    lhs = _eliminate_last(_triple4(W, W, W, nv), 4)
    ps = _power_sums(lams, nv)
    S = ps["S"]
    rhs = _eliminate_last(
        ps["trA3"] * ps["trA3"] * 10 - ps["trA6"] * 28 + S * ps["A2sq"] * 19
        - S ** 3 * Fraction(23, 9), 4)
    return [(lhs, rhs)]


def _build_cubic_half():
    nv = 4
    lams = _lam_vars(4, nv)
    W = _weyl4(lams, nv)
    Wp, _ = _weyl4_pm(lams, nv)
    lhs = _eliminate_last(_triple4(W, W, W, nv), 4)
    rhs = _eliminate_last(_triple4(Wp, Wp, Wp, nv) * 2, 4)
    return [(lhs, rhs)]


def _build_quadratic_split():
    nv = 4
    lams = _lam_vars(4, nv)
    pairs = []
    eighth = Fraction(1, 8)
    for T in _weyl4_pm(lams, nv):
        wsq = _inner4(T, T, 4, nv)
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    for l in range(4):
                        lhs = RationalPoly.zero(nv)
                        for p in range(4):
                            for q in range(4):
                                a = T[i][p][k][q]
                                if a.terms:
                                    b = T[j][p][l][q]
                                    if b.terms:
                                        lhs = lhs + a * b
                                a = T[i][p][l][q]
                                if a.terms:
                                    b = T[j][p][k][q]
                                    if b.terms:
                                        lhs = lhs + a * b
                        rhs = wsq * eighth if (i == j and k == l) else RationalPoly.zero(nv)
                        pairs.append((lhs, rhs))
    return pairs


def _build_harmweyl_equality():
    # The (S/2)|W+|^2 term is part of the source relation; omitting it
    # leaves a nonzero polynomial.
    nv = 4
    lams = _lam_vars(4, nv)
    Wp, _ = _weyl4_pm(lams, nv)
    ps = _power_sums(lams, nv)
    S = ps["S"]
    lhs = (ps["trA3"] * ps["trA3"] * 15 - ps["trA6"] * 42
           + S * ps["A2sq"] * Fraction(55, 2) - S ** 3 * Fraction(13, 4))
    rhs = _triple4(Wp, Wp, Wp, nv) * 3 + S * _inner4(Wp, Wp, 4, nv) * Fraction(1, 2)
    return [(_eliminate_last(lhs, 4), _eliminate_last(rhs, 4))]


def _weyl_general_n(lams, c: RationalPoly, n: int, nv: int):
    ps = _power_sums(lams, nv)
    H, S = ps["H"], ps["S"]
    I = _eye(n, nv)
    A = _diag(lams, n, nv)
    R = c * (n * (n - 1)) + H * H - S
    ric_tf = _diag([c * (n - 1) + H * lam - lam * lam - R * Fraction(1, n)
                    for lam in lams], n, nv)
    half = RationalPoly.const(Fraction(1, 2), nv)
    riem = _t4_combine([
        (c * Fraction(1, 2), _kn(I, I, n, nv)),
        (half, _kn(A, A, n, nv)),
    ], n)
    correction = _t4_combine([
        (RationalPoly.const(Fraction(1, n - 2), nv), _kn_sym(ric_tf, I, n, nv)),
        (R * Fraction(1, 2 * n * (n - 1)), _kn(I, I, n, nv)),
    ], n)
    return [[[[riem[i][j][k][l] - correction[i][j][k][l] for l in range(n)]
              for k in range(n)] for j in range(n)] for i in range(n)]


def _build_general_n():
    pairs = []
    for n in range(3, 9):
        nv = n + 1
        lams = _lam_vars(n, nv)
        c = RationalPoly.variable(n, nv)
        W = _weyl_general_n(lams, c, n, nv)
        lhs = _inner4(W, W, n, nv)
        ps = _power_sums(lams, nv)
        S = ps["S"]
        rhs = (S * S * Fraction(2 * (n * n - 3 * n + 3), (n - 1) * (n - 2))
               - ps["A2sq"] * Fraction(2 * n, n - 2))
        pairs.append((_eliminate_last(lhs, n), _eliminate_last(rhs, n)))
    return pairs


def _build_strict_harmweyl_rhs():
    nv = 1
    S = RationalPoly.variable(0, nv)
    S3 = S ** 3
    lhs = (S3 * Fraction(5, 3) + S3 * (Fraction(55, 6) * Fraction(7, 12))
           - S3 * Fraction(13, 12))
    rhs = S3 * Fraction(427, 72)
    return [(lhs, rhs)]


def _build_lcf_trace6():
    nv = 1
    t = RationalPoly.variable(0, nv)
    lams = [t * (-3), t, t, t]
    ps = _power_sums(lams, nv)
    return [(ps["trA6"], ps["S"] ** 3 * Fraction(61, 144))]


REGISTRY = {
    rec.name: rec for rec in [
        IdentityRecord(
            "normWpm_generalH", "none",
            "|W+|^2 = |W-|^2 = 7/6 S^2 + 1/6 H^4 - 2|A^2|^2 + 2H trA^3 - 4/3 H^2 S",
            _build_normWpm),
        IdentityRecord(
            "normW_generalH", "none",
            "|W|^2 equals twice the one-sided closed form",
            _build_normW),
        IdentityRecord(
            "ricTFsq", "none",
            "|Ric0|^2 = |A^2|^2 - 1/4 S^2 + 3/2 H^2 S - 2H trA^3 - 1/4 H^4",
            _build_ricTFsq),
        IdentityRecord(
            "cgb_consistency", "none",
            "|W|^2 - 2|Ric0|^2 + R^2/6 equals the extrinsic Gauss-Bonnet integrand "
            "(c carried as a fifth variable)",
            _build_cgb),
        IdentityRecord(
            "fialkow_form", "minimal",
            "W = 1/2 A o A + F o g with F = 1/2 (A^2 - S/6 g), componentwise",
            _build_fialkow),
        IdentityRecord(
            "cubic_contraction_minimal", "minimal",
            "triple(W,W,W) = 10 (trA^3)^2 - 28 trA^6 + 19 S |A^2|^2 - 23/9 S^3",
            _build_cubic_contraction),
        IdentityRecord(
            "cubic_half_relation", "minimal",
            "triple(W,W,W) = 2 triple(W+,W+,W+)",
            _build_cubic_half),
        IdentityRecord(
            "weyl_quadratic_split", "none",
            "W+-_ipkq W+-_jplq + W+-_iplq W+-_jpkq = 1/8 |W+-|^2 d_ij d_kl",
            _build_quadratic_split),
        IdentityRecord(
            "harmweyl_equality_form", "minimal",
            "15 (trA^3)^2 - 42 trA^6 + 55/2 S |A^2|^2 - 13/4 S^3 "
            "= 3 triple(W+) + S/2 |W+|^2",
            _build_harmweyl_equality),
        IdentityRecord(
            "generalN_weylnorm", "minimal",
            "|W|^2 = 2(n^2-3n+3)/((n-1)(n-2)) S^2 - 2n/(n-2) |A^2|^2 for n = 3..8",
            _build_general_n),
        IdentityRecord(
            "strict_harmweyl_rhs", "none",
            "5 S^3/3 + 55/6 * 7/12 S^3 - 13/12 S^3 = 427/72 S^3",
            _build_strict_harmweyl_rhs),
        IdentityRecord(
            "lcf_trace6", "none",
            "lambda = (-3t, t, t, t) has trA^6 = 61/144 S^3",
            _build_lcf_trace6),
    ]
}


def corrupted_normWpm_record() -> IdentityRecord:
    """Negative control: the 7/6 coefficient replaced by 1.

    Must fail with witness lambda = (1, 0, 0, 0), where the true side is
    0 and the corrupted side is -1/6.
    """
    return IdentityRecord(
        "normWpm_corrupted", "none",
        "negative control, 7/6 S^2 deliberately replaced by S^2",
        lambda: _build_normWpm(rhs_seven_sixths=Fraction(1)))


@dataclass(frozen=True)
class VerifyResult:
    name: str
    passed: bool
    components: int
    witness: dict | None = None
    detail: str = ""


def _witness_candidates(nvars: int):
    base = [1, -1, 2, -2, 3]
    for v in base:
        for pos in range(nvars):
            pt = [0] * nvars
            pt[pos] = v
            yield tuple(pt)
    for v1, v2 in itertools.product([1, -1, 2], repeat=2):
        for p1, p2 in itertools.combinations(range(nvars), 2):
            pt = [0] * nvars
            pt[p1], pt[p2] = v1, v2
            yield tuple(pt)
    rng = random.Random(20260815)
    for _ in range(64):
        yield tuple(Fraction(rng.randint(-999, 999), rng.randint(1, 30))
                    for _ in range(nvars))


def _find_witness(lhs: RationalPoly, rhs: RationalPoly) -> dict:
    diff = lhs - rhs
    for point in _witness_candidates(diff.nvars):
        if diff.eval(point) != 0:
            return {
                "point": tuple(str(v) for v in point),
                "lhs": str(lhs.eval(point)),
                "rhs": str(rhs.eval(point)),
            }
    lead = diff.sorted_terms()[-1]
    return {"point": None, "lhs": None, "rhs": None,
            "leading_term": {"exponents": lead[0], "coefficient": str(lead[1])}}


def verify_record(record: IdentityRecord) -> VerifyResult:
    """Expand a record's component pairs and zero-test each difference."""
    pairs = record.build()
    for idx, (lhs, rhs) in enumerate(pairs):
        if not (lhs - rhs).is_zero:
            witness = _find_witness(lhs, rhs)
            witness["component"] = idx
            return VerifyResult(
                name=record.name, passed=False, components=len(pairs),
                witness=witness,
                detail=f"component {idx} of {len(pairs)} is a nonzero polynomial")
    return VerifyResult(name=record.name, passed=True, components=len(pairs),
                        detail=record.description)


def verify_identity(name: str) -> VerifyResult:
    """Certify one registered identity by exact polynomial expansion."""
    if name not in REGISTRY:
        raise ValueError(f"unknown identity {name!r}; known: {sorted(REGISTRY)}")
    return verify_record(REGISTRY[name])


def verify_all() -> list:
    return [verify_record(rec) for rec in REGISTRY.values()]


_RECIPES = {}


def _register_recipes():
    def scalars(minimal):
        nv = 4
        lams = _lam_vars(4, nv)
        ps = _power_sums(lams, nv)
        out = dict(ps)
        out["Wpmsq"] = _wpm_closed(lams, nv)
        out["Wsq"] = out["Wpmsq"] * 2
        ric_sq = RationalPoly.zero(nv)
        for r in _ric_tf_entries(lams, nv):
            ric_sq = ric_sq + r * r
        out["ricTFsq"] = ric_sq
        W = _weyl4(lams, nv)
        SW = _star4_sym(W, nv)
        out["trWstarW"] = _inner4(W, SW, 4, nv)
        out["tripleW"] = _triple4(W, W, W, nv)
        Wp, _ = _weyl4_pm(lams, nv)
        out["tripleWplus"] = _triple4(Wp, Wp, Wp, nv)
        if minimal:
            out = {k: _eliminate_last(v, 4) for k, v in out.items()}
        return out

    _RECIPES[False] = scalars(False)
    _RECIPES[True] = scalars(True)


_ALIASES = {
    "s": "S", "h": "H",
    "a2sq": "A2sq", "|a^2|^2": "A2sq", "|a2|^2": "A2sq",
    "tra3": "trA3", "tra5": "trA5", "tra6": "trA6",
    "wsq": "Wsq", "|w|^2": "Wsq",
    "wpmsq": "Wpmsq", "|w+|^2": "Wpmsq", "|w-|^2": "Wpmsq",
    "|w+-|^2": "Wpmsq", "|w±|²": "Wpmsq", "|w±|^2": "Wpmsq",
    "rictfsq": "ricTFsq", "|ric0|^2": "ricTFsq",
    "trwstarw": "trWstarW", "tr(wo*w)": "trWstarW",
    "tr(w∘⋆w)": "trWstarW", "tr(w ∘ ⋆w)": "trWstarW",
    "tr(w*w)": "trWstarW",
    "triplew": "tripleW", "triplewplus": "tripleWplus", "triplew+": "tripleWplus",
}


def assemble_symbolic(recipe: str, minimal: bool = False) -> RationalPoly:
    """Exact polynomial for a named scalar invariant in l1..l4.

    Recognized recipes: S, H, A2sq, trA3, trA5, trA6, Wsq, Wpmsq,
    ricTFsq, trWstarW, tripleW, tripleWplus, plus the usual notational
    aliases like "|W+-|^2" and "tr(W o *W)". With ``minimal`` the result
    is restricted to the trace-free surface. trWstarW expands to the zero
    polynomial: the signature integrand of an induced metric vanishes
    identically.
    """
    if not _RECIPES:
        _register_recipes()
    key = recipe.strip()
    table = _RECIPES[bool(minimal)]
    if key in table:
        return table[key]
    norm = key.lower().replace(" ", "")
    if norm in _ALIASES:
        return table[_ALIASES[norm]]
    raise ValueError(f"unsupported recipe pattern {recipe!r}; known recipes: "
                     f"{sorted(table)}")
