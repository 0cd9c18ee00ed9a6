"""Exact multivariate polynomial and rational-function arithmetic.

Polynomials live over the fixed symbol set (n, k, j, a, b) with Fraction
coefficients, stored as a dict from exponent tuples to nonzero coefficients.
Rational functions are kept as num/den pairs of polynomials; the canonical
form clears all coefficient denominators, removes the polynomial gcd, makes
the shared integer content trivial and fixes the sign so the denominator's
graded-lex leading coefficient is positive.  Two rational functions are equal
iff their canonical text serializations are byte-identical.

Equality at this layer is always decided by exact normalization, never by
evaluation at sample points.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

SYMBOLS = ("n", "k", "j", "a", "b")
_NVARS = len(SYMBOLS)
_VAR_INDEX = {s: i for i, s in enumerate(SYMBOLS)}

Exponent = tuple  # length-5 tuple of nonnegative ints


class MalformedInputError(ValueError):
    """Raised for structurally invalid inputs (e.g. a zero denominator)."""


class PoleError(ArithmeticError):
    """Raised when an evaluation hits a pole; carries the assignment."""

    def __init__(self, message, assignment=None):
        super().__init__(message)
        self.assignment = dict(assignment) if assignment else {}


def _grlex_key(expo):
    return (sum(expo), expo)


class MultiPoly:
    """Sparse multivariate polynomial in (n, k, j, a, b) over Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Fraction] | None = None):
        clean = {}
        if terms:
            for expo, coeff in terms.items():
                if len(expo) != _NVARS or any(e < 0 for e in expo):
                    raise MalformedInputError(f"bad exponent vector {expo!r}")
                c = Fraction(coeff)
                if c != 0:
                    clean[tuple(expo)] = c
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def const(c) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly({(0,) * _NVARS: c} if c else {})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        expo = [0] * _NVARS
        expo[_VAR_INDEX[name]] = 1
        return MultiPoly({tuple(expo): Fraction(1)})

    @staticmethod
    def affine(name: str, offset) -> "MultiPoly":
        """The polynomial <name> + offset."""
        return MultiPoly.var(name) + MultiPoly.const(offset)

    @staticmethod
    def from_univariate(name: str, coeffs: Iterable) -> "MultiPoly":
        """Build sum(coeffs[i] * name**i) from ascending coefficients."""
        idx = _VAR_INDEX[name]
        terms = {}
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                expo = [0] * _NVARS
                expo[idx] = i
                terms[tuple(expo)] = c
        return MultiPoly(terms)

    # ---- predicates / inspection --------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def const_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_const():
            raise MalformedInputError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        idx = _VAR_INDEX[name]
        return max(e[idx] for e in self.terms)

    def variables(self):
        used = [False] * _NVARS
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used[i] = True
        return tuple(SYMBOLS[i] for i in range(_NVARS) if used[i])

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            return None
        expo = max(self.terms, key=_grlex_key)
        return expo, self.terms[expo]

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ---- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise MalformedInputError("negative polynomial power")
        out = MultiPoly.const(1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    # ---- evaluation / substitution -------------------------------------

    def eval(self, assignment: Mapping[str, Fraction]) -> Fraction:
        vals = [None] * _NVARS
        for name, v in assignment.items():
            vals[_VAR_INDEX[name]] = Fraction(v)
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            t = coeff
            for i, p in enumerate(expo):
                if p:
                    if vals[i] is None:
                        raise MalformedInputError(
                            f"symbol {SYMBOLS[i]!r} not assigned")
                    t *= vals[i] ** p
            total += t
        return total

    def subs_consts(self, assignment: Mapping[str, Fraction]) -> "MultiPoly":
        """Substitute Fractions for a subset of the symbols."""
        vals = {}
        for name, v in assignment.items():
            vals[_VAR_INDEX[name]] = Fraction(v)
        out = MultiPoly.zero()
        for expo, coeff in self.terms.items():
            c = coeff
            new = list(expo)
            for i, p in enumerate(expo):
                if p and i in vals:
                    c *= vals[i] ** p
                    new[i] = 0
            out = out + MultiPoly({tuple(new): c})
        return out

    def shift_var(self, name: str, delta) -> "MultiPoly":
        """Substitute name -> name + delta."""
        delta = Fraction(delta)
        if delta == 0:
            return self
        idx = _VAR_INDEX[name]
        out = MultiPoly.zero()
        for expo, coeff in self.terms.items():
            p = expo[idx]
            base = list(expo)
            base[idx] = 0
            # (x + delta)^p expanded by binomials
            acc = {}
            for t in range(p + 1):
                c = coeff * math.comb(p, t) * delta ** (p - t)
                e = list(base)
                e[idx] = t
                acc[tuple(e)] = acc.get(tuple(e), Fraction(0)) + c
            out = out + MultiPoly(acc)
        return out

    def rename_var(self, old: str, new: str) -> "MultiPoly":
        i, j = _VAR_INDEX[old], _VAR_INDEX[new]
        out = {}
        for expo, coeff in self.terms.items():
            if expo[i] and expo[j]:
                raise MalformedInputError(f"{new} already occurs in term")
            e = list(expo)
            e[j] += e[i]
            e[i] = 0
            out[tuple(e)] = coeff
        return MultiPoly(out)

    def as_univariate(self, name: str):
        """Ascending Fraction coefficient list; error if other vars occur."""
        idx = _VAR_INDEX[name]
        coeffs = [Fraction(0)] * (self.degree_in(name) + 1 if self.terms else 1)
        if not self.terms:
            return [Fraction(0)]
        for expo, coeff in self.terms.items():
            if any(p and i != idx for i, p in enumerate(expo)):
                raise MalformedInputError(
                    f"polynomial is not univariate in {name!r}")
            coeffs[expo[idx]] = coeff
        return coeffs

    # ---- integer structure ----------------------------------------------

    def coeff_denominator_lcm(self) -> int:
        out = 1
        for c in self.terms.values():
            out = out * c.denominator // math.gcd(out, c.denominator)
        return out

    def integer_content(self) -> int:
        """gcd of the (integer) coefficients; requires integer coeffs."""
        g = 0
        for c in self.terms.values():
            if c.denominator != 1:
                raise MalformedInputError("polynomial has fractional coeffs")
            g = math.gcd(g, abs(c.numerator))
        return g

    def scale(self, factor) -> "MultiPoly":
        factor = Fraction(factor)
        if factor == 0:
            return MultiPoly.zero()
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {e: c * factor for e, c in self.terms.items()}
        return r

    def rational_content(self) -> Fraction:
        """c such that self/c is integer-primitive with positive leading
        graded-lex coefficient; zero polynomial has content 1."""
        if not self.terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(
                den_lcm, c.denominator)
        c = Fraction(num_gcd, den_lcm)
        return -c if self.leading()[1] < 0 else c

    # ---- serialization ---------------------------------------------------

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[expo]
            factors = [str(coeff)]
            for i, p in enumerate(expo):
                if p == 1:
                    factors.append(SYMBOLS[i])
                elif p > 1:
                    factors.append(f"{SYMBOLS[i]}^{p}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __str__ = to_str

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"


def _coerce(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MultiPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")


# ---------------------------------------------------------------------------
# Multivariate gcd (primitive PRS over the integers)
# ---------------------------------------------------------------------------

def _main_var(f: MultiPoly, g: MultiPoly):
    for name in SYMBOLS:
        if f.degree_in(name) > 0 or g.degree_in(name) > 0:
            return name
    return None


def _univar_coeffs(f: MultiPoly, name: str):
    """f viewed in the main variable: ascending list of MultiPoly coeffs."""
    idx = _VAR_INDEX[name]
    deg = f.degree_in(name)
    out = [dict() for _ in range(deg + 1)]
    for expo, coeff in f.terms.items():
        e = list(expo)
        p = e[idx]
        e[idx] = 0
        out[p][tuple(e)] = coeff
    result = []
    for d in out:
        m = MultiPoly.__new__(MultiPoly)
        m.terms = d
        result.append(m)
    return result


def _from_univar(coeffs, name: str) -> MultiPoly:
    idx = _VAR_INDEX[name]
    out = {}
    for p, poly in enumerate(coeffs):
        for expo, coeff in poly.terms.items():
            e = list(expo)
            e[idx] += p
            out[tuple(e)] = coeff
    return MultiPoly(out)


def _uni_trim(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def _uni_pseudo_rem(f, g, name):
    """Pseudo-remainder of f by g, both ascending MultiPoly coeff lists."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        lead = f[-1]
        f = [c * lg for c in f]
        shift = df - dg
        for i, gc in enumerate(g):
            f[shift + i] = f[shift + i] - lead * gc
        f = _uni_trim(f)
        if not f:
            break
    return f


def poly_content(f: MultiPoly, name: str) -> MultiPoly:
    """gcd of the coefficient polynomials of f seen univariately in name."""
    coeffs = _univar_coeffs(f, name)
    g = MultiPoly.zero()
    for c in coeffs:
        g = poly_gcd(g, c)
        if g.is_const() and g.const_value() == 1:
            break
    return g


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """gcd over ZZ[vars] of two integer-coefficient polynomials,
    integer content included, with positive graded-lex leading coefficient
    (gcd(0, 0) = 0)."""
    f = f.scale(f.coeff_denominator_lcm())
    g = g.scale(g.coeff_denominator_lcm())
    if f.is_zero() and g.is_zero():
        return MultiPoly.zero()
    if f.is_zero():
        return _positive_sign(g)
    if g.is_zero():
        return _positive_sign(f)
    if f.is_const() or g.is_const():
        return MultiPoly.const(math.gcd(f.integer_content(),
                                        g.integer_content()))
    name = _main_var(f, g)
    if f.degree_in(name) == 0 or g.degree_in(name) == 0:
        # one of them is free of the main variable: gcd divides its content
        free = f if f.degree_in(name) == 0 else g
        other = g if free is f else f
        return poly_gcd(free, poly_content(other, name))
    cf = poly_content(f, name)
    cg = poly_content(g, name)
    c = poly_gcd(cf, cg)
    pf = _uni_trim([_divexact(x, cf) for x in _univar_coeffs(f, name)])
    pg = _uni_trim([_divexact(x, cg) for x in _univar_coeffs(g, name)])
    if len(pf) < len(pg):
        pf, pg = pg, pf
    while True:
        r = _uni_pseudo_rem(pf, pg, name)
        if not r:
            h = _from_univar(pg, name)
            break
        rp = _from_univar(r, name)
        rp = _divexact(rp, poly_content(rp, name))
        if rp.degree_in(name) == 0:
            h = MultiPoly.const(1)
            break
        pf, pg = pg, _univar_coeffs(rp, name)
    return _positive_sign(_primitive_in(h, name) * c)


def _positive_sign(f: MultiPoly) -> MultiPoly:
    if f.is_zero():
        return f
    if f.leading()[1] < 0:
        return -f
    return f


def _primitive_in(f: MultiPoly, name: str) -> MultiPoly:
    """f divided by its content with respect to the given main variable."""
    if f.is_zero() or f.degree_in(name) <= 0:
        return f
    content = poly_content(f, name)
    if content.is_const() and content.const_value() == 1:
        return f
    return _divexact(f, content)


def _divexact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact multivariate division f / g; raises if not divisible."""
    if g.is_zero():
        raise MalformedInputError("division by zero polynomial")
    if g.is_const():
        return f.scale(Fraction(1, 1) / g.const_value())
    q = MultiPoly.zero()
    r = f
    ge, gc = g.leading()
    while not r.is_zero():
        re, rc = r.leading()
        diff = tuple(x - y for x, y in zip(re, ge))
        if any(d < 0 for d in diff):
            raise MalformedInputError("inexact polynomial division")
        mono = MultiPoly({diff: rc / gc})
        q = q + mono
        r = r - mono * g
    return q


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Quotient of two MultiPoly values; den must be nonzero.

    Arithmetic operators do not normalize (they only cross-multiply), so
    chained certificate algebra stays cheap; call normalized() for the
    canonical representative.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise MalformedInputError("zero denominator polynomial")
        self.num = num
        self.den = den

    @staticmethod
    def const(c) -> "RatFun":
        return RatFun(MultiPoly.const(c))

    @staticmethod
    def var(name: str) -> "RatFun":
        return RatFun(MultiPoly.var(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce_rf(other)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce_rf(other))

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other.num.is_zero():
            raise MalformedInputError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def __pow__(self, m: int):
        if m >= 0:
            return RatFun(self.num ** m, self.den ** m)
        if self.num.is_zero():
            raise MalformedInputError("zero to a negative power")
        return RatFun(self.den ** (-m), self.num ** (-m))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFun.const(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return ratfun_equal(self, other)

    def __hash__(self):
        c = self.normalized()
        return hash((c.num, c.den))

    def subs_consts(self, assignment) -> "RatFun":
        num = self.num.subs_consts(assignment)
        den = self.den.subs_consts(assignment)
        if den.is_zero():
            raise PoleError("substitution collapses denominator", assignment)
        return RatFun(num, den)

    def shift_var(self, name: str, delta) -> "RatFun":
        return RatFun(self.num.shift_var(name, delta),
                      self.den.shift_var(name, delta))

    def rename_var(self, old: str, new: str) -> "RatFun":
        return RatFun(self.num.rename_var(old, new),
                      self.den.rename_var(old, new))

    def normalized(self) -> "RatFun":
        return ratfun_normalize(self)

    def eval(self, assignment) -> Fraction:
        return ratfun_eval(self, assignment)

    def degree_in(self, name: str):
        return self.num.degree_in(name), self.den.degree_in(name)

    def to_str(self) -> str:
        return f"({self.num.to_str()})/({self.den.to_str()})"

    __str__ = to_str

    def __repr__(self):
        return f"RatFun({self.to_str()})"


def _coerce_rf(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, MultiPoly):
        return RatFun(x)
    if isinstance(x, (int, Fraction)):
        return RatFun.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RatFun")


def ratfun_normalize(f: RatFun) -> RatFun:
    """Canonical representative of f.

    Both parts get integer coefficients, the polynomial gcd is removed, the
    integer contents are made coprime and the denominator's graded-lex
    leading coefficient is positive.  Idempotent; 0 normalizes to 0/1.
    Every step scales num and den together, so the value is preserved at
    all non-pole points.
    """
    if f.den.is_zero():
        raise MalformedInputError("zero denominator polynomial")
    if f.num.is_zero():
        return RatFun(MultiPoly.zero(), MultiPoly.const(1))
    scale = (f.num.coeff_denominator_lcm() * f.den.coeff_denominator_lcm())
    num = f.num.scale(scale)
    den = f.den.scale(scale)
    g = poly_gcd(num, den)
    if not g.is_const() or g.const_value() != 1:
        num = _divexact(num, g)
        den = _divexact(den, g)
        # by Gauss's lemma the quotients are already integral; the joint
        # rescale below is a no-op guard against rounding in odd inputs
        common = num.coeff_denominator_lcm()
        common = common * den.coeff_denominator_lcm() // math.gcd(
            common, den.coeff_denominator_lcm())
        num = num.scale(common)
        den = den.scale(common)
    c = math.gcd(num.integer_content(), den.integer_content())
    if c > 1:
        num = num.scale(Fraction(1, c))
        den = den.scale(Fraction(1, c))
    if den.leading()[1] < 0:
        num = -num
        den = -den
    return RatFun(num, den)


def ratfun_eval(f: RatFun, assignment: Mapping[str, Fraction]) -> Fraction:
    den = f.den.eval(assignment)
    if den == 0:
        raise PoleError(f"pole of rational function at {assignment}",
                        assignment)
    return f.num.eval(assignment) / den


def ratfun_equal(f: RatFun, g: RatFun) -> bool:
    return (f.num * g.den - g.num * f.den).is_zero()


# ---------------------------------------------------------------------------
# Univariate sign analysis (Sturm chains over Fraction coefficients)
# ---------------------------------------------------------------------------

def uni_eval(coeffs, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def uni_deriv(coeffs):
    return [c * i for i, c in enumerate(coeffs)][1:] or [Fraction(0)]


def _strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _integerize(coeffs):
    """Scale by a positive constant to primitive integer coefficients."""
    p = _strip([Fraction(c) for c in coeffs])
    if not p:
        return []
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    content = 0
    for c in ints:
        content = math.gcd(content, abs(c))
    return [c // content for c in ints]


def _int_prem_signed(f, g):
    """c * rem(f, g) for some c > 0, over integer coefficient lists."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    flips = 0
    while f and len(f) - 1 >= dg:
        lead = f[-1]
        shift = len(f) - 1 - dg
        f = [c * lg for c in f]
        for i, gc in enumerate(g):
            f[shift + i] -= lead * gc
        f = _strip(f)
        flips += 1
    if lg < 0 and flips % 2 == 1:
        f = [-c for c in f]
    content = 0
    for c in f:
        content = math.gcd(content, abs(c))
    return [c // content for c in f] if content else []


def _sturm_chain(p):
    chain = [p, _integerize(uni_deriv(p))]
    while chain[-1]:
        r = _int_prem_signed(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def count_roots_above(coeffs, bound: Fraction) -> int:
    """Number of distinct real roots of the polynomial in (bound, +inf)."""
    p = _integerize(coeffs)
    if len(p) <= 1:
        return 0
    chain = _sturm_chain(p)

    def variations(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for x, y in zip(signs, signs[1:]) if x * y < 0)

    bound = Fraction(bound)
    at_bound = [1 if uni_eval(c, bound) > 0 else
                (-1 if uni_eval(c, bound) < 0 else 0) for c in chain]
    at_inf = [1 if c[-1] > 0 else -1 for c in chain]
    return variations(at_bound) - variations(at_inf)


def _shifted_coeff_sign(p, bound: Fraction):
    """+1/-1 when all Taylor coefficients of p(bound + t) share that sign
    (a cheap sufficient certificate of fixed sign on [bound, inf));
    None when inconclusive."""
    n = len(p)
    taylor = [Fraction(0)] * n
    for i, c in enumerate(p):
        for t in range(i + 1):
            taylor[t] += c * math.comb(i, t) * bound ** (i - t)
    if all(c >= 0 for c in taylor) and taylor[0] > 0:
        return 1
    if all(c <= 0 for c in taylor) and taylor[0] < 0:
        return -1
    return None


def sign_on_ray(coeffs, bound: Fraction):
    """Sign of the polynomial on the closed ray [bound, +inf).

    Returns +1 or -1 when the sign is constant there, else None.  Exact:
    a fast shifted-coefficient certificate first, then Sturm root counting.
    """
    p = _integerize(coeffs)
    bound = Fraction(bound)
    if not p:
        return None
    if len(p) == 1:
        return 1 if p[0] > 0 else -1
    quick = _shifted_coeff_sign(p, bound)
    if quick is not None:
        return quick
    v = uni_eval(p, bound)
    if v == 0:
        return None
    if count_roots_above(p, bound) > 0:
        return None
    return 1 if v > 0 else -1


def positive_on_ray(coeffs, bound: Fraction) -> bool:
    """True iff the polynomial is > 0 for every real x >= bound."""
    return sign_on_ray(coeffs, bound) == 1
