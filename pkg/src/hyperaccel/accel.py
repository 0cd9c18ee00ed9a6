"""Accelerated series generators and their iterated-recursion cross-checks.

Two transforms are implemented for the balanced family

    F(n, k) = [a,a,a,a / (1+n-a)^4]_{k+b} (n + 2k + 2b),   f(n, b) = sum_k F:

* the single acceleration, driven by the shift recursion
  f(n) = r1(n) + r2(n) f(n+1) with r1 = -G(n,0)/p2(n), r2 = -p1(n)/p2(n),
  whose closed form has rate -1/4; and
* the double acceleration, which combines that recursion with the index-shift
  step f(n, b+1) - f(n, b) = r3(n, b) into the diagonal recursion
  f(n, b) = r4(n, b) + r2(n) f(n+1, b+1), r4(n,b) = r1(n,b) - r2(n) r3(n+1,b),
  whose closed form has rate -1/1024.

Generated terms carry index-dependent Pochhammer data (indices like j-1 or
j+b+1, bases like n-a+j+1), which a fixed-parameter SeriesSpec cannot hold;
GeneralTerm models them faithfully and reindex() collapses them to a
standard SeriesSpec plus the split-off leading terms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .certify import g_at_zero, tail_condition
from .exact import MalformedInputError, MultiPoly, PoleError, RatFun
from .hyperterm import RawF, SeriesSpec, pochhammer, term_value

_J = MultiPoly.var("j")


class NotCollapsibleError(ValueError):
    """The index dependence cannot be absorbed into a fixed-parameter spec."""


def _p1_value(a: Fraction, n: Fraction) -> Fraction:
    return (2 * a - n - 1) ** 5


def _p2_value(a: Fraction, n: Fraction) -> Fraction:
    return 2 * (4 * a - 2 * n - 1) * (a - n - 1) ** 4


@dataclass(frozen=True)
class AccelParams:
    """Admissible (a, b, n) for the accelerations.

    Construction screens every denominator the iterations will touch over a
    fixed shift horizon, so later pole failures surface immediately with a
    parameter-level diagnostic.
    """

    a: Fraction
    b: int
    n: Fraction

    HORIZON = 24

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "n", Fraction(self.n))
        if not isinstance(self.b, int):
            raise MalformedInputError("b must be an integer")
        a, b, n = self.a, self.b, self.n
        if not tail_condition(a, n):
            raise MalformedInputError(
                f"(a, n) = ({a}, {n}) violates a < (2n+1)/4")
        for i in range(self.HORIZON + 1):
            if _p2_value(a, n + i) == 0:
                raise MalformedInputError(f"p2 vanishes at shift {i}")
            if _p1_value(a, n + i) == 0:
                raise MalformedInputError(f"p1 vanishes at shift {i}")
        for j in range(-1, self.HORIZON + 1):
            if 4 * a - 2 * j - 2 * n - 3 == 0:
                raise MalformedInputError(f"q2 vanishes at j={j}")
            if -a + b + 2 * j + n + 3 == 0:
                raise MalformedInputError(
                    f"double-step denominator vanishes at j={j}")
        try:
            probe = accelerate_t1(self)
            for j in range(0, self.HORIZON + 1):
                probe.general.term(j)
            probe = accelerate_t2(self)
            for j in range(-1, self.HORIZON + 1):
                probe.general.term(j)
        except (PoleError, ZeroDivisionError) as exc:
            raise MalformedInputError(
                f"degenerate bracket for (a,b,n)=({a},{b},{n}): {exc}"
            ) from exc


# ---------------------------------------------------------------------------
# Recursion ingredients
# ---------------------------------------------------------------------------

def r1(params: AccelParams, shift: int, b_shift: int = 0) -> Fraction:
    """-G(n+shift, 0) / p2(n+shift), with b optionally shifted too."""
    a, b, n = params.a, params.b + b_shift, params.n + shift
    p2 = _p2_value(a, n)
    if p2 == 0:
        raise PoleError(f"p2 zero at shift {shift}", {"n": n})
    return -g_at_zero(RawF(a, b, n)) / p2


def r2(params: AccelParams, shift: int) -> Fraction:
    """-p1(n+shift) / p2(n+shift); b-independent."""
    a, n = params.a, params.n + shift
    p2 = _p2_value(a, n)
    if p2 == 0:
        raise PoleError(f"p2 zero at shift {shift}", {"n": n})
    return -_p1_value(a, n) / p2


def r3(params: AccelParams, n_shift: int = 0, b_shift: int = 0) -> Fraction:
    """Index-shift step: f(n, b+1) - f(n, b) = r3(n, b) with

        r3(n, b) = -[a,a,a,a / (n-a+1)^4]_b (n + 2b).
    """
    a, b, n = params.a, params.b + b_shift, params.n + n_shift
    top = pochhammer(a, b)
    bot = pochhammer(n - a + 1, b)
    if bot == 0:
        raise PoleError("r3 bracket degenerates", {"n": n, "b": b})
    return -(top / bot) ** 4 * (n + 2 * b)


def r4(params: AccelParams, shift: int = 0) -> Fraction:
    """Diagonal-step constant r4(n+s, b+s) = r1 - r2 * r3(n+s+1, b+s).

    Note the minus sign: it is forced by combining
    f(n,b) = r1(n,b) + r2(n) f(n+1,b) with f(n+1,b) = f(n+1,b+1) - r3(n+1,b),
    and only this sign makes the diagonal recursion hold (checked exactly in
    the tests against slowly-summed f values).
    """
    return (r1(params, shift, b_shift=shift)
            - r2(params, shift) * r3(params, n_shift=shift + 1,
                                     b_shift=shift))


def mathcal_R(params: AccelParams, j: int) -> Fraction:
    """Closed-form coefficient of the single acceleration at index j."""
    a, b, n = params.a, Fraction(params.b), params.n
    jf = Fraction(j)
    den = (2 * n - 4 * a + 1) * (2 * n - 4 * a + 2 * jf + 1) * (n - a + 1) ** 4
    if den == 0:
        raise PoleError("coefficient denominator vanishes", {"j": j})
    quad = (10 * a * a - 8 * a * b - 14 * a * jf - 14 * a * n - 6 * a
            + 2 * b * b + 6 * b * jf + 6 * b * n + 2 * b + 5 * jf * jf
            + 10 * jf * n + 4 * jf + 5 * n * n + 4 * n + 1)
    return (n - 2 * a + 1) ** 5 / den * quad


def _mathcal_R_ratfun(params: AccelParams) -> RatFun:
    a, b, n = params.a, Fraction(params.b), params.n
    quad = MultiPoly.from_univariate("j", [
        10 * a * a - 8 * a * b - 14 * a * n - 6 * a + 2 * b * b + 6 * b * n
        + 2 * b + 5 * n * n + 4 * n + 1,
        -14 * a + 6 * b + 10 * n + 4,
        Fraction(5),
    ])
    lin = MultiPoly.from_univariate("j", [2 * n - 4 * a + 1, Fraction(2)])
    scale = (n - 2 * a + 1) ** 5 / ((2 * n - 4 * a + 1) * (n - a + 1) ** 4)
    return RatFun(quad.scale(scale), lin)


def t2_pieces(params: AccelParams, j: int):
    """(q1(j), q2(j), s1(n), s2(j)) of the double acceleration."""
    a, b, n = params.a, Fraction(params.b), params.n
    jf = Fraction(j)
    q1 = (-10 * a * a + 8 * a * b + 22 * a * jf + 14 * a * n + 28 * a
          - 2 * b * b - 10 * b * jf - 6 * b * n - 12 * b - 13 * jf * jf
          - 16 * jf * n - 32 * jf - 5 * n * n - 20 * n - 20)
    q2 = 4 * a - 2 * jf - 2 * n - 3
    if q2 == 0:
        raise PoleError("q2 vanishes", {"j": j})
    s1_den = 4 * (4 * a - 2 * n - 1) * (-a + n + 1) ** 4
    if s1_den == 0:
        raise PoleError("s1 denominator vanishes", {"n": n})
    s1 = (-2 * a + n + 1) ** 5 / s1_den
    s2_den = (-a + b + 2 * jf + n + 3) ** 4
    if s2_den == 0:
        raise PoleError("s2 denominator vanishes", {"j": j})
    s2 = (-2 * a + jf + n + 2) ** 5 * (2 * b + 3 * jf + n + 4) / s2_den
    return q1, q2, s1, s2


def _t2_w_ratfun(params: AccelParams) -> RatFun:
    """(q1(j) + s2(j)) / q2(j) as a rational function of j."""
    a, b, n = params.a, Fraction(params.b), params.n
    q1 = MultiPoly.from_univariate("j", [
        -10 * a * a + 8 * a * b + 14 * a * n + 28 * a - 2 * b * b
        - 6 * b * n - 12 * b - 5 * n * n - 20 * n - 20,
        22 * a - 10 * b - 16 * n - 32,
        Fraction(-13),
    ])
    q2 = MultiPoly.from_univariate("j", [4 * a - 2 * n - 3, Fraction(-2)])
    s2_num = (MultiPoly.from_univariate("j", [n - 2 * a + 2, 1]) ** 5
              * MultiPoly.from_univariate("j", [2 * b + n + 4, 3]))
    s2_den = MultiPoly.from_univariate("j", [-a + b + n + 3, 2]) ** 4
    return RatFun(q1 * s2_den + s2_num, q2 * s2_den)


# ---------------------------------------------------------------------------
# General terms with index-dependent Pochhammer data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PochPiece:
    """pochhammer(base_const + base_slope*j, index_const + index_slope*j)
    raised to `power` (negative power = reciprocal).  Slopes are 0 or 1."""

    base_const: Fraction
    base_slope: int
    index_const: int
    index_slope: int
    power: int

    def value(self, j: int) -> Fraction:
        base = self.base_const + self.base_slope * j
        index = self.index_const + self.index_slope * j
        v = pochhammer(base, index)
        if self.power < 0 and v == 0:
            raise PoleError(f"({base})_{index} = 0 in denominator", {"j": j})
        return v ** self.power

    def ratio(self) -> RatFun:
        """value(j+1)/value(j) as a rational function of j."""
        alpha, beta = self.base_const, self.base_slope
        gamma, delta = self.index_const, self.index_slope
        if (beta, delta) == (0, 0):
            core = RatFun.const(1)
        elif (beta, delta) == (0, 1):
            core = RatFun(MultiPoly.affine("j", alpha + gamma))
        elif (beta, delta) == (1, 0):
            core = RatFun(MultiPoly.affine("j", alpha + gamma),
                          MultiPoly.affine("j", alpha))
        elif (beta, delta) == (1, 1):
            num = (MultiPoly.from_univariate("j", [alpha + gamma, 2])
                   * MultiPoly.from_univariate("j", [alpha + gamma + 1, 2]))
            core = RatFun(num, MultiPoly.affine("j", alpha))
        else:
            raise NotCollapsibleError(
                f"unsupported slopes ({beta}, {delta})")
        return core ** self.power


@dataclass(frozen=True)
class GeneralTerm:
    """term(j) = coeff * z^j * prod pieces(j) * rat_num(j)/rat_den(j)."""

    coeff: Fraction
    z: Fraction
    pieces: tuple
    rat: RatFun
    start: int

    def term(self, j: int) -> Fraction:
        if j < self.start:
            raise MalformedInputError(f"j={j} below start={self.start}")
        t = self.coeff * self.z ** j
        for piece in self.pieces:
            t *= piece.value(j)
        return t * self.rat.eval({"j": Fraction(j)})

    def ratio_ratfun(self) -> RatFun:
        """term(j+1)/term(j) symbolically."""
        out = RatFun.const(self.z)
        for piece in self.pieces:
            out = out * piece.ratio()
        return out * (self.rat.shift_var("j", 1) / self.rat)

    def rate_limit(self) -> Fraction:
        """Exact limiting value of the term ratio."""
        ratio = self.ratio_ratfun().normalized()
        dn = ratio.num.degree_in("j")
        dd = ratio.den.degree_in("j")
        if dn != dd:
            return Fraction(0) if dn < dd else None
        lead_num = ratio.num.as_univariate("j")[-1]
        lead_den = ratio.den.as_univariate("j")[-1]
        return lead_num / lead_den


class Theorem(enum.Enum):
    T1 = "single"
    T2 = "double"


@dataclass(frozen=True)
class AcceleratedSeries:
    general: GeneralTerm
    theorem: Theorem
    params: AccelParams
    lhs_description: str


def accelerate_t1(params: AccelParams) -> AcceleratedSeries:
    """Closed form of the single acceleration:

        sum_k F(n,k) = sum_{j>=0} (-1/4)^j
            [N,N,N,N,N / D1,D2,D2,D2,D2]_{j-1} [a^4 / (n-a+j+1)^4]_b * C(n,j)

    with N = n-2a+2, D1 = n-2a+3/2, D2 = n-a+2 and C the closed-form
    rational coefficient.  Exactly equals the iterated recursion termwise
    (term(j) of this series = iterate term j-1).
    """
    a, b, n = params.a, params.b, params.n
    N = n - 2 * a + 2
    D1 = n - 2 * a + Fraction(3, 2)
    D2 = n - a + 2
    pieces = (
        PochPiece(N, 0, -1, 1, 5),
        PochPiece(D1, 0, -1, 1, -1),
        PochPiece(D2, 0, -1, 1, -4),
        PochPiece(n - a + 1, 1, b, 0, -4),
    )
    coeff = pochhammer(a, b) ** 4
    general = GeneralTerm(coeff=coeff, z=Fraction(-1, 4), pieces=pieces,
                          rat=_mathcal_R_ratfun(params), start=0)
    return AcceleratedSeries(
        general=general, theorem=Theorem.T1, params=params,
        lhs_description=f"sum_k F(n,k) at (a,b,n)=({a},{b},{n})")


def accelerate_t2(params: AccelParams) -> AcceleratedSeries:
    """Closed form of the double acceleration:

        f(n,b) = s1(n) sum_{j>=-1} (-1/4)^j (q1(j)+s2(j))/q2(j)
            [N,N,N,N,N / D1,D2,D2,D2,D2]_j [a^4 / (n+j-a+2)^4]_{j+b+1}.

    The trailing bracket divides by four copies of (n+j-a+2)_{j+b+1}; that
    multiplicity is what produces the -1/1024 rate.  The series is returned
    unscaled: s1(n) * sum term(j) = f(n, b).
    """
    a, b, n = params.a, params.b, params.n
    N = n - 2 * a + 2
    D1 = n - 2 * a + Fraction(3, 2)
    D2 = n - a + 2
    M = n - a + 2
    pieces = (
        PochPiece(N, 0, 0, 1, 5),
        PochPiece(D1, 0, 0, 1, -1),
        PochPiece(D2, 0, 0, 1, -4),
        PochPiece(a, 0, b + 1, 1, 4),
        PochPiece(M, 1, b + 1, 1, -4),
    )
    general = GeneralTerm(coeff=Fraction(1), z=Fraction(-1, 4),
                          pieces=pieces, rat=_t2_w_ratfun(params), start=-1)
    return AcceleratedSeries(
        general=general, theorem=Theorem.T2, params=params,
        lhs_description=f"f(n,b)/s1(n) at (a,b,n)=({a},{b},{n})")


def t2_scale(params: AccelParams) -> Fraction:
    """s1(n); multiplies the double-acceleration sum to give f(n, b)."""
    return t2_pieces(params, 0)[2]


# ---------------------------------------------------------------------------
# Iterated recursions (independent evaluation path)
# ---------------------------------------------------------------------------

def iterate_t1(params: AccelParams, m: int) -> Fraction:
    """sum_{j=-1}^{m} (prod_{i=0}^{j} r2(n+i)) r1(n+j+1), exact.

    Empty product convention at j = -1; m = -1 gives r1(n).
    """
    if m < -1:
        raise MalformedInputError("m must be >= -1")
    total = Fraction(0)
    prod = Fraction(1)
    for j in range(-1, m + 1):
        if j >= 0:
            prod *= r2(params, j)
        total += prod * r1(params, j + 1)
    return total


def iterate_t2(params: AccelParams, m: int) -> Fraction:
    """sum_{j=-1}^{m} (prod_{i=0}^{j} r2(n+i)) r4(n+j+1, b+j+1), exact."""
    if m < -1:
        raise MalformedInputError("m must be >= -1")
    total = Fraction(0)
    prod = Fraction(1)
    for j in range(-1, m + 1):
        if j >= 0:
            prod *= r2(params, j)
        total += prod * r4(params, j + 1)
    return total


# ---------------------------------------------------------------------------
# Reindexing: collapse a GeneralTerm into a fixed-parameter SeriesSpec
# ---------------------------------------------------------------------------

def reindex(series: AcceleratedSeries, shift: int):
    """Equivalent SeriesSpec starting at 0, plus the absorbed constant.

    spec.term(i) = general.term(start + shift + i) for all i >= 0 and the
    returned Fraction is the exact sum of the split-off leading terms
    general.term(start), ..., general.term(start + shift - 1).

    The collapse uses (x)_{m+i} = (x)_m (x+m)_i, (x+i)_m = (x)_m (x+m)_i
    / (x)_i and (x)_{2i} = 4^i (x/2)_i ((x+1)/2)_i; the result is checked
    termwise against the general term before it is returned.
    """
    if shift < 0:
        raise MalformedInputError("shift must be >= 0")
    general = series.general
    offset = general.start + shift
    absorbed = Fraction(0)
    for j in range(general.start, offset):
        absorbed += general.term(j)

    coeff = general.coeff * general.z ** offset
    z = general.z
    num_params: list = []
    den_params: list = []
    for piece in general.pieces:
        alpha = piece.base_const + piece.base_slope * offset
        gamma = piece.index_const + piece.index_slope * offset
        beta, delta, power = piece.base_slope, piece.index_slope, piece.power
        if (beta, delta) == (0, 0):
            coeff *= _checked_poch(alpha, gamma, power)
        elif (beta, delta) == (0, 1):
            coeff *= _checked_poch(alpha, gamma, power)
            _push(num_params, den_params, alpha + gamma, power)
        elif (beta, delta) == (1, 0):
            coeff *= _checked_poch(alpha, gamma, power)
            _push(num_params, den_params, alpha + gamma, power)
            _push(num_params, den_params, alpha, -power)
        elif (beta, delta) == (1, 1):
            coeff *= _checked_poch(alpha, gamma, power)
            z *= Fraction(4) ** power
            _push(num_params, den_params, (alpha + gamma) / 2, power)
            _push(num_params, den_params, (alpha + gamma + 1) / 2, power)
            _push(num_params, den_params, alpha, -power)
        else:
            raise NotCollapsibleError(
                f"index slopes ({beta}, {delta}) cannot be absorbed")
    _cancel(num_params, den_params)
    rat = general.rat.shift_var("j", offset)
    factor_num = rat.num.rename_var("j", "k")
    factor_den = rat.den.rename_var("j", "k")
    # fold rational content into the prefactor so the emitted factor
    # polynomials are integer-primitive with positive leading denominator
    cn = factor_num.rational_content()
    cd = factor_den.rational_content()
    coeff *= cn / cd
    factor_num = factor_num.scale(1 / cn)
    factor_den = factor_den.scale(1 / cd)

    spec = SeriesSpec(
        prefactor=coeff,
        ratio_z=z,
        num_params=tuple(sorted(num_params)),
        den_params=tuple(sorted(den_params)),
        factor_num=factor_num,
        factor_den=factor_den,
        start=0,
    )
    for i in range(0, 8):
        if term_value(spec, i) != general.term(offset + i):
            raise NotCollapsibleError(
                f"collapse mismatch at index {i} after shift {shift}")
    return spec, absorbed


def _checked_poch(base: Fraction, index: int, power: int) -> Fraction:
    v = pochhammer(base, index)
    if v == 0 and power < 0:
        raise PoleError(f"({base})_{index} = 0 in denominator", {})
    return v ** power


def _push(num_params, den_params, value: Fraction, power: int):
    target = num_params if power > 0 else den_params
    for _ in range(abs(power)):
        target.append(Fraction(value))


def _cancel(num_params, den_params):
    for v in list(num_params):
        if v in den_params:
            num_params.remove(v)
            den_params.remove(v)
