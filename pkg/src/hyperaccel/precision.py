"""Arbitrary-precision summation with rigorous error accounting.

HPFloat is a dyadic value paired with an exact nonnegative error bound, so
every result is a certified enclosure [value - err, value + err].  All
arithmetic is Fraction-based and deterministic: round-half-even at a fixed
bit count, no platform float enters any bound.

Reference constants are computed independently of the series catalog:

* pi via the two-term arctangent decomposition
  pi = 16 atan(1/5) - 4 atan(1/239).
  Truncation lemma: for x >= 1 the arctangent series
  atan(1/x) = sum_{i>=0} (-1)^i / ((2i+1) x^(2i+1)) alternates with strictly
  decreasing magnitudes, so stopping before term m leaves a remainder of
  absolute value at most 1/((2m+1) x^(2m+1)).
* zeta(3) via the central-binomial series
  zeta(3) = (5/2) sum_{m>=1} (-1)^(m-1) / (m^3 binom(2m, m)).
  Truncation lemma: the magnitude ratio of consecutive terms is
  m^3 / ((m+1)(2m+1)(2m+2)) < 1/4, so the series alternates with decreasing
  terms and the remainder after term m is at most the next term's magnitude.

Geometric tails use hyperterm.tail_bound.  Polynomially decaying series
(decay exponent s > 1 read off the term ratio) use a telescoping majorant:
once |T(k+1)/T(k)| <= ((k+c)/(k+c+1))^p holds for every k >= M (an exact
polynomial-positivity fact checked by Sturm chains), comparison with the
integral of x^(-p) gives sum_{k>=M} |T(k)| <= |T(M)| (1 + (M+c)/(p-1)).
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import (MalformedInputError, MultiPoly, count_roots_above,
                    positive_on_ray, uni_eval)
from .hyperterm import (
    Base,
    CannotBoundError,
    SeriesSpec,
    TargetConstant,
    pochhammer,
    tail_bound,
    term_ratio,
    term_value,
)


class ConvergenceTooSlowError(ArithmeticError):
    """The decay bound cannot reach the requested digits within budget."""


# ---------------------------------------------------------------------------
# HPFloat
# ---------------------------------------------------------------------------

def _round_dyadic(x: Fraction, bits: int) -> Fraction:
    scaled = x * (1 << bits)
    return Fraction(round(scaled), 1 << bits)


@dataclass(frozen=True)
class HPFloat:
    """Dyadic value with a certified absolute error bound."""

    value: Fraction
    precision_bits: int
    abs_error: Fraction

    def __post_init__(self):
        if self.abs_error < 0:
            raise MalformedInputError("negative error bound")

    @staticmethod
    def exact(x, bits: int) -> "HPFloat":
        x = Fraction(x)
        v = _round_dyadic(x, bits)
        return HPFloat(v, bits, abs(v - x))

    @staticmethod
    def from_interval(lo: Fraction, hi: Fraction, bits: int) -> "HPFloat":
        mid = (lo + hi) / 2
        v = _round_dyadic(mid, bits)
        return HPFloat(v, bits, (hi - lo) / 2 + abs(v - mid))

    def interval(self):
        return self.value - self.abs_error, self.value + self.abs_error

    def add(self, other: "HPFloat") -> "HPFloat":
        bits = min(self.precision_bits, other.precision_bits)
        v = self.value + other.value
        r = _round_dyadic(v, bits)
        return HPFloat(r, bits,
                       self.abs_error + other.abs_error + abs(r - v))

    def sub(self, other: "HPFloat") -> "HPFloat":
        return self.add(other.neg())

    def neg(self) -> "HPFloat":
        return HPFloat(-self.value, self.precision_bits, self.abs_error)

    def mul(self, other: "HPFloat") -> "HPFloat":
        bits = min(self.precision_bits, other.precision_bits)
        xlo, xhi = self.interval()
        ylo, yhi = other.interval()
        corners = [xlo * ylo, xlo * yhi, xhi * ylo, xhi * yhi]
        return HPFloat.from_interval(min(corners), max(corners), bits)

    def mul_exact(self, c) -> "HPFloat":
        c = Fraction(c)
        v = self.value * c
        r = _round_dyadic(v, self.precision_bits)
        return HPFloat(r, self.precision_bits,
                       abs(c) * self.abs_error + abs(r - v))

    def add_error(self, extra) -> "HPFloat":
        return HPFloat(self.value, self.precision_bits,
                       self.abs_error + Fraction(extra))

    def reciprocal(self) -> "HPFloat":
        lo, hi = self.interval()
        if lo <= 0 <= hi:
            raise MalformedInputError("reciprocal of interval containing 0")
        return HPFloat.from_interval(min(1 / lo, 1 / hi),
                                     max(1 / lo, 1 / hi),
                                     self.precision_bits)

    def div(self, other: "HPFloat") -> "HPFloat":
        return self.mul(other.reciprocal())

    def decimal(self, digits: int = 30) -> str:
        """Decimal rendering of the central value (not an enclosure)."""
        q = 10 ** digits
        scaled = self.value * q
        whole = round(scaled)
        sign = "-" if whole < 0 else ""
        whole = abs(whole)
        head, tail = divmod(whole, q)
        return f"{sign}{head}.{str(tail).zfill(digits)}"


# ---------------------------------------------------------------------------
# Reference constants (independent of the catalog)
# ---------------------------------------------------------------------------

def _atan_inv_fixed(x: int, bits: int):
    """floor-style fixed point atan(1/x) at 2^-bits; returns (value, err_ulps)."""
    one = 1 << bits
    total = 0
    i = 0
    terms = 0
    while True:
        denom = (2 * i + 1) * x ** (2 * i + 1)
        t = one // denom
        if t == 0:
            break
        total += -t if i & 1 else t
        terms += 1
        i += 1
    # each kept term floors (<= 1 ulp each); the alternating remainder is
    # below the first dropped true term, itself below 1 ulp
    return total, terms + 2


def ref_pi(precision_bits: int) -> HPFloat:
    """Enclosure of pi with abs_error <= 2^(4 - precision_bits)."""
    if precision_bits < 64:
        raise MalformedInputError("precision_bits must be >= 64")
    guard = precision_bits + 32
    a5, e5 = _atan_inv_fixed(5, guard)
    a239, e239 = _atan_inv_fixed(239, guard)
    value = Fraction(16 * a5 - 4 * a239, 1 << guard)
    err = Fraction(16 * e5 + 4 * e239, 1 << guard)
    v = _round_dyadic(value, precision_bits)
    return HPFloat(v, precision_bits, err + abs(v - value))


def ref_zeta3(precision_bits: int) -> HPFloat:
    """Enclosure of zeta(3) via the alternating central-binomial series."""
    if precision_bits < 64:
        raise MalformedInputError("precision_bits must be >= 64")
    cutoff = Fraction(1, 1 << (precision_bits + 16))
    total = Fraction(0)
    m = 1
    term = Fraction(1, 2)  # 1 / (1^3 * binom(2,1))
    while True:
        total += term if m & 1 else -term
        nxt = term * m ** 3
        nxt /= (m + 1) * (2 * m + 1) * (2 * m + 2)
        m += 1
        term = nxt
        if Fraction(5, 2) * term < cutoff:
            break
    value = Fraction(5, 2) * total
    trunc = Fraction(5, 2) * term
    v = _round_dyadic(value, precision_bits)
    return HPFloat(v, precision_bits, trunc + abs(v - value))


def target_value(target: TargetConstant, precision_bits: int) -> HPFloat:
    """Certified enclosure of coefficient * base + addend."""
    bits = precision_bits
    if target.base is Base.ONE:
        base = HPFloat.exact(1, bits)
    elif target.base is Base.INV_PI:
        base = ref_pi(bits + 8).reciprocal()
    elif target.base is Base.INV_PI2:
        p = ref_pi(bits + 8)
        base = p.mul(p).reciprocal()
    elif target.base is Base.PI2:
        p = ref_pi(bits + 8)
        base = p.mul(p)
    elif target.base is Base.ZETA3:
        base = ref_zeta3(bits + 8)
    else:  # pragma: no cover - enum is closed
        raise MalformedInputError(f"unknown base {target.base}")
    out = base.mul_exact(target.coefficient)
    if target.addend:
        out = out.add(HPFloat.exact(target.addend, bits + 8))
    v = _round_dyadic(out.value, bits)
    return HPFloat(v, bits, out.abs_error + abs(v - out.value))


# ---------------------------------------------------------------------------
# Summation
# ---------------------------------------------------------------------------

def sum_series(spec: SeriesSpec, terms: int, precision_bits: int,
               decay: str = "geometric") -> HPFloat:
    """Certified enclosure of the full series sum from `terms` leading terms.

    decay="geometric" requires |z| < 1 and uses the monotone-ratio tail
    bound; decay="polynomial" handles rate-1 specs whose term ratio shows a
    decay exponent s > 1 and uses the telescoping-majorant bound.
    """
    if terms < 0:
        raise MalformedInputError("terms must be >= 0")
    if decay == "geometric":
        tail = tail_bound(spec, spec.start + terms)
        total = Fraction(0)
        for k in range(spec.start, spec.start + terms):
            total += term_value(spec, k)
        v = _round_dyadic(total, precision_bits)
        return HPFloat(v, precision_bits, tail + abs(v - total))
    if decay == "polynomial":
        return _sum_polynomial(spec, terms, precision_bits)
    raise MalformedInputError(f"unknown decay mode {decay!r}")


def polynomial_decay_exponent(spec: SeriesSpec) -> Fraction:
    """s with T(k) ~ k^(-s), from the 1/k coefficient of the term ratio."""
    if abs(Fraction(spec.ratio_z)) != 1:
        raise MalformedInputError("polynomial mode expects |z| = 1")
    ratio = term_ratio(spec).normalized()
    num = ratio.num.as_univariate("k")
    den = ratio.den.as_univariate("k")
    if len(num) != len(den):
        raise CannotBoundError("term ratio does not tend to 1")
    scale = den[-1] / num[-1]
    if scale < 0:
        # alternating rate-1 series: compare |ratio|
        scale = -scale
        num = [-c for c in num]
    return (den[-2] - scale * num[-2]) / den[-1]


def _polynomial_majorant(spec: SeriesSpec, M: int):
    """(p, c) with |T(k+1)/T(k)| <= ((k+c)/(k+c+1))^p for all k >= M."""
    s = polynomial_decay_exponent(spec)
    p = int(s) if s.denominator == 1 else int(math.floor(s))
    if p < 2:
        raise ConvergenceTooSlowError(
            f"decay exponent {s} admits no integral-comparison bound")
    ratio = term_ratio(spec).normalized()
    rnum = ratio.num.as_univariate("k")
    rden = ratio.den.as_univariate("k")
    Mf = Fraction(M)
    for coeffs in (rnum, rden):
        if uni_eval(coeffs, Mf) == 0 or count_roots_above(coeffs, Mf) > 0:
            raise CannotBoundError(
                f"term ratio has a zero or pole beyond k={M}")
    sign_num = 1 if uni_eval(rnum, Mf) > 0 else -1
    sign_den = 1 if uni_eval(rden, Mf) > 0 else -1
    for c in (0, 1, 2, 4, 8, 16, 32, 64):
        lhs = _upoly_mul([Fraction(c), Fraction(1)], p)
        rhs = _upoly_mul([Fraction(c + 1), Fraction(1)], p)
        # want sign_den*den*(k+c)^p - sign_num*num*(k+c+1)^p >= 0 on [M, inf)
        q = _upoly_sub(
            _upoly_prod([Fraction(sign_den) * x for x in rden], lhs),
            _upoly_prod([Fraction(sign_num) * x for x in rnum], rhs))
        if positive_on_ray(q, Mf):
            return p, c
    raise CannotBoundError(
        f"no telescoping majorant found at M={M}; increase terms")


def _upoly_mul(lin, power):
    out = [Fraction(1)]
    for _ in range(power):
        out = _upoly_prod(out, lin)
    return out


def _upoly_prod(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, ci in enumerate(f):
        if ci:
            for j, cj in enumerate(g):
                out[i + j] += ci * cj
    return out


def _upoly_sub(f, g):
    out = [Fraction(0)] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] -= c
    return out


def _sum_polynomial(spec: SeriesSpec, terms: int,
                    precision_bits: int) -> HPFloat:
    if terms < 8:
        raise MalformedInputError("polynomial mode needs a real head sum")
    M = spec.start + terms
    p, c = _polynomial_majorant(spec, M)
    ratio = term_ratio(spec)
    # incremental head sum at working precision; per-step rounding tracked
    bits = precision_bits + 32
    t = HPFloat.exact(term_value(spec, spec.start), bits)
    total = HPFloat.exact(0, bits)
    for k in range(spec.start, M):
        total = total.add(t)
        t = t.mul_exact(ratio.eval({"k": Fraction(k)}))
    tail = abs(term_value(spec, M)) * (1 + Fraction(M + c, p - 1))
    out = total.add_error(tail)
    v = _round_dyadic(out.value, precision_bits)
    return HPFloat(v, precision_bits, out.abs_error + abs(v - out.value))


def digits_agreement(x: HPFloat, y: HPFloat) -> int:
    """Largest d with |x - y| <= 10^-d max(1, |y|), clamped by the error
    bounds so the claim never exceeds what the enclosures support."""
    effective = abs(x.value - y.value) + x.abs_error + y.abs_error
    base = max(Fraction(1), abs(y.value))
    if effective == 0:
        return 10 ** 6
    d = 0
    limit = 10 ** 6
    while d < limit and effective * 10 ** (d + 1) <= base:
        d += 1
    return d


# ---------------------------------------------------------------------------
# Catalog verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalReport:
    entry_id: str
    terms_used: int
    precision_bits: int
    computed: Optional[HPFloat]
    target: Optional[HPFloat]
    abs_diff: Optional[Fraction]
    digits_agreement: int
    passed: bool
    status: str            # "pass", "fail", "skipped-rate-1", "no-target"
    elapsed_s: float

    def row(self, rate, timing=False):
        ms = f"{self.elapsed_s * 1000:.1f}" if timing else "0"
        return (self.entry_id, str(rate), str(self.terms_used),
                str(self.digits_agreement),
                self.status if self.status.startswith("skip") else
                ("pass" if self.passed else "fail"), ms)


def verify_entry(entry, min_digits: int = 30,
                 max_terms: int = 10000) -> EvalReport:
    """Verify one catalog entry against its target constant.

    Term count starts at ceil(min_digits / -log10|rate|) + 10 and doubles
    until the certified tail is comfortably below the requested agreement
    (or max_terms is hit); precision is 4*min_digits + 64 bits.  The whole
    procedure is deterministic.
    """
    start = time.perf_counter()
    rate = abs(Fraction(entry.expected_rate))
    if rate >= 1:
        return EvalReport(
            entry_id=entry.id, terms_used=0, precision_bits=0,
            computed=None, target=None, abs_diff=None, digits_agreement=0,
            passed=True, status="skipped-rate-1",
            elapsed_s=time.perf_counter() - start)
    if entry.target is None:
        return EvalReport(
            entry_id=entry.id, terms_used=0, precision_bits=0,
            computed=None, target=None, abs_diff=None, digits_agreement=0,
            passed=True, status="no-target",
            elapsed_s=time.perf_counter() - start)
    bits = 4 * min_digits + 64
    digits_per_term = -math.log10(float(rate.numerator)) \
        + math.log10(float(rate.denominator))
    terms = math.ceil(min_digits / digits_per_term) + 10
    tgt = target_value(entry.target, bits)
    threshold = Fraction(1, 10 ** (min_digits + 2)) * max(
        Fraction(1), abs(tgt.value))
    computed = None
    while True:
        terms = min(terms, max_terms)
        computed = sum_series(entry.series, terms, bits)
        if computed.abs_error <= threshold or terms >= max_terms:
            break
        terms *= 2
    diff = abs(computed.value - tgt.value)
    digits = digits_agreement(computed, tgt)
    consistent = diff <= computed.abs_error + tgt.abs_error
    passed = consistent and digits >= min_digits
    return EvalReport(
        entry_id=entry.id, terms_used=terms, precision_bits=bits,
        computed=computed, target=tgt, abs_diff=diff,
        digits_agreement=digits, passed=passed,
        status="pass" if passed else "fail",
        elapsed_s=time.perf_counter() - start)


def render_reports(reports, entries_by_id, fmt: str = "text",
                   timing: bool = False) -> str:
    rows = [r.row(entries_by_id[r.entry_id].expected_rate
                  if r.entry_id in entries_by_id else "?", timing)
            for r in sorted(reports, key=lambda r: r.entry_id)]
    header = ("id", "rate", "terms", "digits", "pass", "ms")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Exact partial-sum identities
# ---------------------------------------------------------------------------

def check_glaisher_partial(n_max: int) -> bool:
    """sum_{k=0}^{n} (-1/2)_k^4 / (k!)^4 (1-4k)
       = (n+1)^4 (8n^2+4n+1) (1/2)_n^4 / ((n+1)!)^4  for 0 <= n <= n_max.

    The right side is the source's Gamma form rewritten with
    Gamma(n + 1/2) = (1/2)_n Gamma(1/2) and Gamma(1/2)^2 = pi, which removes
    the transcendental factors exactly.
    """
    if n_max < 0:
        raise MalformedInputError("n_max must be >= 0")
    total = Fraction(0)
    poch_m = Fraction(1)   # (-1/2)_n
    poch_h = Fraction(1)   # (1/2)_n
    fact = Fraction(1)     # n!
    for n in range(0, n_max + 1):
        if n > 0:
            poch_m *= Fraction(-1, 2) + (n - 1)
            poch_h *= Fraction(1, 2) + (n - 1)
            fact *= n
        total += poch_m ** 4 / fact ** 4 * (1 - 4 * n)
        rhs = ((n + 1) ** 4 * (8 * n * n + 4 * n + 1)
               * poch_h ** 4 / (fact * (n + 1)) ** 4)
        if total != rhs:
            raise AssertionError(f"glaisher partial-sum identity fails at n={n}")
    return True


def check_guillera_partial(n_max: int) -> bool:
    """sum_{k=0}^{n} (1/2)_k^4/(2)_k^4 (4k+3)
       = 16 - (3/2)_n^4/(2)_n^4 (8n^2+20n+13)  for 0 <= n <= n_max."""
    if n_max < 0:
        raise MalformedInputError("n_max must be >= 0")
    total = Fraction(0)
    poch_h = Fraction(1)   # (1/2)_n
    poch_3h = Fraction(1)  # (3/2)_n
    poch_2 = Fraction(1)   # (2)_n
    for n in range(0, n_max + 1):
        if n > 0:
            poch_h *= Fraction(1, 2) + (n - 1)
            poch_3h *= Fraction(3, 2) + (n - 1)
            poch_2 *= 1 + n
        total += poch_h ** 4 / poch_2 ** 4 * (4 * n + 3)
        rhs = 16 - poch_3h ** 4 / poch_2 ** 4 * (8 * n * n + 20 * n + 13)
        if total != rhs:
            raise AssertionError(f"partial-sum identity fails at n={n}")
    return True


def check_identity8(a, min_digits: int = 25) -> bool:
    """Two-sided check of the a-shifted quadratic identity

      8a sum_k [ (1/2)^4 / (a+1)^4 ]_k (4k+2a+1)
        = sum_k (-1/4)^k [ (a+1/2)^5 / (a+1)^5 ]_k (20(k+a)^2+8(k+a)+1).

    The left side decays like k^-(4a+1), far too slowly to sum directly at
    high precision, but it equals 16a * sum_k F(a+1/2, k) for the balanced
    family with (a,b,n) = (1/2, 0, a+1/2); that sum is evaluated through its
    rate -1/4 acceleration with a certified geometric tail.  The right side
    is summed directly.  Returns True when the enclosures agree to at least
    min_digits.
    """
    from .accel import AccelParams, accelerate_t1, reindex

    a = Fraction(a)
    if a <= 0:
        raise MalformedInputError("identity check requires a > 0")
    bits = 4 * min_digits + 64
    terms = math.ceil(min_digits / math.log10(4)) + 12
    lhs_spec, absorbed = reindex(
        accelerate_t1(AccelParams(Fraction(1, 2), 0, a + Fraction(1, 2))), 0)
    assert absorbed == 0
    lhs = sum_series(lhs_spec, terms, bits).mul_exact(16 * a)
    rhs_spec = SeriesSpec(
        prefactor=Fraction(1),
        ratio_z=Fraction(-1, 4),
        num_params=(a + Fraction(1, 2),) * 5,
        den_params=(a + 1,) * 5,
        factor_num=_shifted_quadratic(a),
        factor_den=_ONE_POLY_K,
        start=0)
    rhs = sum_series(rhs_spec, terms, bits)
    if abs(lhs.value - rhs.value) > lhs.abs_error + rhs.abs_error:
        return False
    return digits_agreement(lhs, rhs) >= min_digits


def _shifted_quadratic(a: Fraction):
    return MultiPoly.from_univariate(
        "k", [20 * a * a + 8 * a + 1, 40 * a + 8, Fraction(20)])


_ONE_POLY_K = MultiPoly.const(1)
