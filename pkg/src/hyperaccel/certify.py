"""Exact verification of the first-order holonomic difference equation

    p1(n) F(n+1, k) + p2(n) F(n, k) = G(n, k+1) - G(n, k),   G = R * F,

for the four-fold balanced family F(n, k) = [a,a,a,a / (1+n-a)^4]_{k+b}
(n + 2k + 2b).  The certificate triple (R, p1, p2) is hard-coded and then
proved, either by normalizing the rational-function identity to zero or by
exact evaluation at deterministic random rational points.  Discovering
certificates is out of scope.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import MultiPoly, PoleError, RatFun
from .hyperterm import RawF, pochhammer

_N = MultiPoly.var("n")
_K = MultiPoly.var("k")
_A = MultiPoly.var("a")
_B = MultiPoly.var("b")
_ONE = MultiPoly.const(1)


@dataclass(frozen=True)
class Certificate:
    """(R(n,k), p1(n), p2(n)) with shift order r = 1."""

    R: RatFun
    p1: MultiPoly
    p2: MultiPoly
    r: int = 1

    def __post_init__(self):
        if self.p2.is_zero():
            raise ValueError("p2 must be nonzero")
        if self.r != 1:
            raise ValueError("only shift order r = 1 is supported")


@dataclass(frozen=True)
class FFamily:
    """Structural data of F(n,k): four equal numerator bases a, four equal
    denominator bases 1+n-a, common Pochhammer index k+b, and the linear
    factor n + 2k + 2b."""

    num_base: MultiPoly = field(default_factory=lambda: _A)
    den_base: MultiPoly = field(default_factory=lambda: _ONE + _N - _A)
    multiplicity: int = 4
    linear_factor: MultiPoly = field(
        default_factory=lambda: _N + 2 * _K + 2 * _B)


def f_shift_ratios(fam: FFamily):
    """(sigma_n, sigma_k) = (F(n+1,k)/F(n,k), F(n,k+1)/F(n,k)).

    Both follow from (x+1)_m / (x)_m = (x+m)/x with m = k + b.
    """
    m = fam.multiplicity
    base = fam.den_base                     # 1 + n - a
    shifted = base + _K + _B                # 1 + n - a + k + b
    lin = fam.linear_factor                 # n + 2k + 2b
    sigma_n = RatFun(base ** m * lin.shift_var("n", 1), shifted ** m * lin)
    sigma_k = RatFun((fam.num_base + _K + _B) ** m * lin.shift_var("k", 1),
                     shifted ** m * lin)
    return sigma_n, sigma_k


def theorem1_certificate() -> Certificate:
    """The hard-coded certificate for the four-fold family."""
    quad = (10 * _A ** 2 - 8 * _A * _B - 8 * _A * _K - 14 * _A * _N
            - 6 * _A + 2 * _B ** 2 + 4 * _B * _K + 6 * _B * _N + 2 * _B
            + 2 * _K ** 2 + 6 * _K * _N + 2 * _K + 5 * _N ** 2 + 4 * _N
            + _ONE)
    R = RatFun((_A - _N - _ONE) ** 4 * quad, 2 * _B + 2 * _K + _N)
    p1 = (2 * _A - _N - _ONE) ** 5
    p2 = 2 * (4 * _A - 2 * _N - _ONE) * (_A - _N - _ONE) ** 4
    return Certificate(R=R, p1=p1, p2=p2)


class CheckMode(enum.Enum):
    SYMBOLIC = "symbolic"
    RANDOMIZED = "randomized"


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    mode: CheckMode
    detail: str = ""

    def __bool__(self):
        return self.ok


def _difference(fam: FFamily, cert: Certificate) -> RatFun:
    """p1*sigma_n + p2 - (R(n,k+1)*sigma_k - R(n,k)), zero iff certified.

    Cleared over the one shared denominator S * R.den * R'.den (the two
    shift ratios have the same denominator S), which keeps the expansion an
    order of magnitude smaller than chained pairwise additions.
    """
    sigma_n, sigma_k = f_shift_ratios(fam)
    r_next = cert.R.shift_var("k", 1)
    if not (sigma_n.den - sigma_k.den).is_zero():  # pragma: no cover
        return (RatFun(cert.p1) * sigma_n + RatFun(cert.p2)
                - (r_next * sigma_k - cert.R))
    s_den = sigma_n.den
    dd = cert.R.den * r_next.den
    num = (cert.p1 * sigma_n.num * dd
           + cert.p2 * s_den * dd
           - r_next.num * sigma_k.num * cert.R.den
           + cert.R.num * s_den * r_next.den)
    return RatFun(num, s_den * dd)


def check_certificate(fam: FFamily, cert: Certificate,
                      mode: CheckMode = CheckMode.SYMBOLIC,
                      points: int = 200, seed: int = 0) -> CheckResult:
    """Prove (or refute) the difference equation for the given certificate.

    SYMBOLIC normalizes the defect to zero exactly.  RANDOMIZED evaluates
    both sides at `points` rational points drawn deterministically from
    `seed`; each coordinate ranges over a set of more than twice the total
    degree of the cleared identity, so a nonzero defect polynomial cannot
    vanish on all draws except with probability below (deg/size)^points.
    """
    if mode is CheckMode.SYMBOLIC:
        diff = _difference(fam, cert)
        if diff.num.is_zero():
            return CheckResult(True, mode)
        lead_e, lead_c = diff.num.leading()
        return CheckResult(
            False, mode,
            f"nonzero normal form: {len(diff.num.terms)} terms, "
            f"leading {lead_c} * {lead_e}")
    # conservative total-degree bound of the cleared identity: every factor
    # appearing in any numerator or denominator contributes at most once
    sn, sk = f_shift_ratios(fam)
    degree_bound = (cert.p1.total_degree() + cert.p2.total_degree()
                    + sn.num.total_degree() + sn.den.total_degree()
                    + sk.num.total_degree() + sk.den.total_degree()
                    + cert.R.num.total_degree() + cert.R.den.total_degree()
                    + 2)
    size = 2 * degree_bound + 13
    rng = random.Random(seed)
    sigma_n, sigma_k = sn, sk
    r_next = cert.R.shift_var("k", 1)
    done = 0
    while done < points:
        pt = {name: Fraction(rng.randrange(1, size + 1))
              for name in ("n", "k", "a", "b")}
        try:
            lhs = cert.p1.eval(pt) * sigma_n.eval(pt) + cert.p2.eval(pt)
            rhs = r_next.eval(pt) * sigma_k.eval(pt) - cert.R.eval(pt)
        except PoleError:
            continue
        if lhs != rhs:
            return CheckResult(
                False, mode,
                f"failing point {pt}: lhs={lhs} rhs={rhs}")
        done += 1
    return CheckResult(True, mode)


def g_at_zero(raw: RawF) -> Fraction:
    """G(n, 0) = R(n, 0) * F(n, 0) for the hard-coded certificate."""
    a, b, n = raw.a, raw.b, raw.n
    cert = theorem1_certificate()
    assignment = {"n": n, "k": Fraction(0), "a": a, "b": Fraction(b)}
    r0 = cert.R.eval(assignment)
    f0 = ((pochhammer(a, b) / pochhammer(1 + n - a, b)) ** 4
          * (n + 2 * b))
    return r0 * f0


def tail_condition(a, n) -> bool:
    """Summability threshold a < (2n+1)/4 of the direct series.

    Equivalently the k-power decay exponent 8a - 4n - 3 is < -1.
    """
    return Fraction(a) < (2 * Fraction(n) + 1) / 4
