"""Rational hypergeometric series terms and rigorous geometric tail bounds.

A series is T(k) = prefactor * z^k * prod (u_i)_k / prod (v_j)_k * P(k)/Q(k)
with rational data throughout.  Parameter lists must be balanced (equal
length), which pins the limiting term ratio to z and keeps the tail-bound
machinery honest.  Negative Pochhammer indices follow the reciprocal
convention (x)_{-m} = 1 / ((x-1)(x-2)...(x-m)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import (
    MalformedInputError,
    MultiPoly,
    PoleError,
    RatFun,
    count_roots_above,
    sign_on_ray,
    uni_eval,
)


class CannotBoundError(ArithmeticError):
    """No rigorous geometric tail bound is available for this series."""


class UnsupportedSpecError(ValueError):
    """Spec falls outside the supported family (e.g. unbalanced lists)."""


def pochhammer(base, m: int) -> Fraction:
    """Rising factorial (base)_m, extended to negative m via reciprocals."""
    base = Fraction(base)
    if m >= 0:
        out = Fraction(1)
        for i in range(m):
            out *= base + i
        return out
    out = Fraction(1)
    for i in range(1, -m + 1):
        f = base - i
        if f == 0:
            raise PoleError(f"pochhammer({base}, {m}) hits a zero factor",
                            {"base": base, "m": m})
        out *= f
    return 1 / out


class Base(enum.Enum):
    ONE = "1"
    INV_PI = "1/pi"
    INV_PI2 = "1/pi^2"
    PI2 = "pi^2"
    ZETA3 = "zeta3"


@dataclass(frozen=True)
class TargetConstant:
    """coefficient * base + addend."""

    coefficient: Fraction
    base: Base
    addend: Fraction = Fraction(0)

    def __str__(self):
        s = f"{self.coefficient} * {self.base.value}"
        if self.addend:
            s += f" + {self.addend}"
        return s


_ONE_POLY = MultiPoly.const(1)


@dataclass(frozen=True)
class SeriesSpec:
    """One rational hypergeometric series."""

    prefactor: Fraction
    ratio_z: Fraction
    num_params: tuple
    den_params: tuple
    factor_num: MultiPoly
    factor_den: MultiPoly
    start: int = 0
    target: Optional[TargetConstant] = None

    def __post_init__(self):
        if len(self.num_params) != len(self.den_params):
            raise UnsupportedSpecError(
                f"unbalanced parameter lists ({len(self.num_params)} up, "
                f"{len(self.den_params)} down)")
        if self.factor_den.is_zero():
            raise MalformedInputError("zero factor denominator")
        for v in self.den_params:
            v = Fraction(v)
            # (v)_k vanishes at some k > 0 iff v is a nonpositive integer
            if v.denominator == 1 and v <= 0:
                raise MalformedInputError(
                    f"denominator parameter {v} has a Pochhammer pole")
        den = self.factor_den.as_univariate("k")
        for k in range(self.start, self.start + 8):
            if uni_eval(den, Fraction(k)) == 0:
                raise MalformedInputError(
                    f"factor denominator vanishes at k={k}")
        if count_roots_above(den, Fraction(self.start + 7)) > 0:
            # a root beyond the scanned window could still be non-integral;
            # check the integers up to the largest real root directly
            hi = _cauchy_bound(den)
            for k in range(self.start + 8, int(hi) + 2):
                if uni_eval(den, Fraction(k)) == 0:
                    raise MalformedInputError(
                        f"factor denominator vanishes at k={k}")


def series_spec(prefactor, z, num_params, den_params, poly_coeffs,
                factor_den_coeffs=None, start=0, target=None) -> SeriesSpec:
    """Convenience constructor from plain rationals and coefficient lists."""
    return SeriesSpec(
        prefactor=Fraction(prefactor),
        ratio_z=Fraction(z),
        num_params=tuple(Fraction(u) for u in num_params),
        den_params=tuple(Fraction(v) for v in den_params),
        factor_num=MultiPoly.from_univariate("k", poly_coeffs),
        factor_den=(MultiPoly.from_univariate("k", factor_den_coeffs)
                    if factor_den_coeffs is not None else _ONE_POLY),
        start=start,
        target=target,
    )


def _cauchy_bound(coeffs) -> Fraction:
    """All real roots lie in |x| <= 1 + max|c_i| / |lead|."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return Fraction(0)
    lead = abs(cs[-1])
    return 1 + max(abs(c) for c in cs[:-1]) / lead


def term_value(spec: SeriesSpec, k: int) -> Fraction:
    """Exact T(k)."""
    if k < spec.start:
        raise MalformedInputError(f"k={k} below start={spec.start}")
    t = Fraction(spec.prefactor) * Fraction(spec.ratio_z) ** k
    for u in spec.num_params:
        t *= pochhammer(u, k)
    for v in spec.den_params:
        p = pochhammer(v, k)
        if p == 0:
            raise PoleError(f"({v})_{k} = 0 in denominator", {"k": k})
        t /= p
    den = spec.factor_den.eval({"k": Fraction(k)})
    if den == 0:
        raise PoleError(f"factor denominator zero at k={k}", {"k": k})
    return t * spec.factor_num.eval({"k": Fraction(k)}) / den


def term_ratio(spec: SeriesSpec) -> RatFun:
    """T(k+1)/T(k) as a rational function of k."""
    num = MultiPoly.const(Fraction(spec.ratio_z).numerator)
    den = MultiPoly.const(Fraction(spec.ratio_z).denominator)
    for u in spec.num_params:
        num = num * MultiPoly.affine("k", Fraction(u))
    for v in spec.den_params:
        den = den * MultiPoly.affine("k", Fraction(v))
    num = num * spec.factor_num.shift_var("k", 1) * spec.factor_den
    den = den * spec.factor_num * spec.factor_den.shift_var("k", 1)
    return RatFun(num, den).normalized()


def asymptotic_rate(spec: SeriesSpec) -> Fraction:
    """Signed limiting ratio; equals z for balanced parameter lists."""
    # balance is enforced at construction, so the Pochhammer quotient and
    # the polynomial factor both tend to 1
    return Fraction(spec.ratio_z)


@dataclass(frozen=True)
class RawF:
    """Parameters of the shifted balanced term family

        F(n, k) = [a,a,a,a / 1+n-a,...,1+n-a]_{k+b} * (n + 2k + 2b).
    """

    a: Fraction
    b: int
    n: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "n", Fraction(self.n))
        if not isinstance(self.b, int):
            raise MalformedInputError("b must be an integer")


def shift_normalize(raw: RawF) -> SeriesSpec:
    """Rewrite F(n, k) with the index shift absorbed:
    (x)_{k+b} = (x)_b * (x+b)_k.
    """
    a, b, n = raw.a, raw.b, raw.n
    top = pochhammer(a, b)
    bot = pochhammer(1 + n - a, b)
    if top == 0 or bot == 0:
        raise PoleError("index shift degenerates", {"a": a, "b": b, "n": n})
    return SeriesSpec(
        prefactor=top ** 4 / bot ** 4,
        ratio_z=Fraction(1),
        num_params=(a + b,) * 4,
        den_params=(1 + n - a + b,) * 4,
        factor_num=MultiPoly.from_univariate("k", [n + 2 * b, 2]),
        factor_den=_ONE_POLY,
        start=0,
    )


# ---------------------------------------------------------------------------
# Geometric tail bounds
# ---------------------------------------------------------------------------

def ratio_sup_bound(spec: SeriesSpec, M: int) -> Fraction:
    """A proven bound rho with |T(k+1)/T(k)| <= rho < 1 for all k >= M.

    Strategy: the squared ratio r(k)^2 is differentiable for k >= M once no
    pole or sign change survives past M; the sign of d/dk r(k)^2 is the sign
    of a polynomial S(k).  If S has no root in (M, inf) the ratio is monotone
    there, so sup |r| is |r(M)| (decreasing) or the limit |z| (increasing).
    Root counting is exact (Sturm chains); nothing is estimated numerically.
    """
    z = abs(Fraction(spec.ratio_z))
    if z >= 1:
        raise CannotBoundError(f"|z| = {z} >= 1: no geometric domination")
    ratio = term_ratio(spec)
    rnum = ratio.num.as_univariate("k")
    rden = ratio.den.as_univariate("k")
    Mf = Fraction(M)
    # the ratio must be pole-free and nonzero beyond M for |r| to budge
    signs = []
    for coeffs in (rnum, rden):
        s = sign_on_ray(coeffs, Mf)
        if s is None:
            raise CannotBoundError(
                f"term ratio has a zero or pole beyond k={M}; "
                "increase the truncation point")
        signs.append(s)
    # (|r|^2)' = 2 r r' has the sign of num*den*(num'den - num den');
    # num and den have the constant signs just computed, so only the core
    # polynomial needs exact sign analysis
    core = _poly_sub(_poly_mul(_poly_deriv(rnum), rden),
                     _poly_mul(rnum, _poly_deriv(rden)))
    core = _strip_list(core)
    rM = abs(uni_eval(rnum, Mf) / uni_eval(rden, Mf))
    if not core:
        return min(rM, z)  # constant |ratio|
    core_sign = sign_on_ray(core, Mf)
    if core_sign is None:
        raise CannotBoundError(
            f"term ratio is not monotone beyond k={M}; "
            "increase the truncation point")
    if core_sign * signs[0] * signs[1] < 0:
        rho = rM          # |ratio| strictly decreasing on [M, inf)
    else:
        rho = z           # increasing toward the limit |z|
    if rho >= 1:
        raise CannotBoundError(f"ratio bound {rho} >= 1 at k={M}")
    return rho


def tail_bound(spec: SeriesSpec, M: int) -> Fraction:
    """Rigorous B with |sum_{k>=M} T(k)| <= B.

    From |T(k)| <= |T(M)| rho^(k-M) the whole tail including T(M) obeys
    B = |T(M)| / (1 - rho).  When the ratio is not yet monotone at M (it
    may dip before settling toward |z|), the bound advances to the first
    monotone point M' <= M + 64 and adds the finitely many head terms in
    absolute value, which keeps it sound.  B > 0 unless the tail vanishes.
    """
    if M < spec.start:
        raise MalformedInputError(f"M={M} below start={spec.start}")
    head = Fraction(0)
    last_error = None
    for probe in (M, M + 4, M + 8, M + 16, M + 32, M + 64):
        try:
            rho = ratio_sup_bound(spec, probe)
        except CannotBoundError as exc:
            last_error = exc
            if abs(Fraction(spec.ratio_z)) >= 1:
                raise
            continue
        for k in range(M, probe):
            head += abs(term_value(spec, k))
        return head + abs(term_value(spec, probe)) / (1 - rho)
    raise last_error


def _poly_deriv(coeffs):
    return [c * i for i, c in enumerate(coeffs)][1:] or [Fraction(0)]


def _poly_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, ci in enumerate(f):
        if ci:
            for j, cj in enumerate(g):
                out[i + j] += ci * cj
    return out


def _poly_sub(f, g):
    out = [Fraction(0)] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] -= c
    return out


def _strip_list(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c
