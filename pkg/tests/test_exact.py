from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hyperaccel.exact import (
    MalformedInputError,
    MultiPoly,
    PoleError,
    RatFun,
    count_roots_above,
    poly_gcd,
    positive_on_ray,
    ratfun_equal,
    ratfun_eval,
    ratfun_normalize,
)

N = MultiPoly.var("n")
K = MultiPoly.var("k")
A = MultiPoly.var("a")
B = MultiPoly.var("b")
ONE = MultiPoly.const(1)


class TestNormalize:
    def test_common_factor_removal(self):
        f = ratfun_normalize(RatFun(2 * N + 2, MultiPoly.const(4)))
        assert f.num == N + 1
        assert f.den == MultiPoly.const(2)

    def test_exact_cancellation(self):
        f = ratfun_normalize(RatFun(N * N - A * A, N - A))
        assert f.num == N + A
        assert f.den == ONE

    def test_zero_case(self):
        f = ratfun_normalize(RatFun(MultiPoly.zero(), N + 1))
        assert f.num.is_zero()
        assert f.den == ONE

    def test_idempotent(self):
        f = RatFun((6 * N + 6) * (K - A), (4 * K - 4 * A) * (N + 1) * N)
        once = ratfun_normalize(f)
        twice = ratfun_normalize(once)
        assert once.to_str() == twice.to_str()

    def test_denominator_sign_positive(self):
        f = ratfun_normalize(RatFun(N, -2 * K))
        lead = f.den.leading()
        assert lead[1] > 0

    def test_zero_denominator_rejected(self):
        with pytest.raises(MalformedInputError):
            RatFun(N, MultiPoly.zero())


class TestEval:
    def test_simple(self):
        f = RatFun(N + 1, MultiPoly.const(2))
        assert ratfun_eval(f, {"n": Fraction(3)}) == 2

    def test_certificate_denominator(self):
        f = RatFun(ONE, 2 * B + 2 * K + N)
        val = ratfun_eval(f, {"b": Fraction(0), "k": Fraction(0),
                              "n": Fraction(3, 2)})
        assert val == Fraction(2, 3)

    def test_pole(self):
        f = RatFun(ONE, N - A)
        with pytest.raises(PoleError):
            ratfun_eval(f, {"n": Fraction(1), "a": Fraction(1)})

    def test_missing_symbol(self):
        with pytest.raises(MalformedInputError):
            ratfun_eval(RatFun(N + K, ONE), {"n": Fraction(1)})


class TestEqual:
    def test_cancellation_equal(self):
        assert ratfun_equal(RatFun(N * N - 1, N - 1), RatFun(N + 1, ONE))

    def test_sign_expansion(self):
        # the two printed shapes of the same quintic
        lhs = RatFun((2 * A - N - 1) ** 5, ONE)
        rhs = RatFun(-((N - 2 * A + 1) ** 5), ONE)
        assert ratfun_equal(lhs, rhs)

    def test_not_equal(self):
        assert not ratfun_equal(RatFun(N + 1, ONE), RatFun(N + 2, ONE))

    def test_equal_iff_serialization_identical(self):
        pairs = [
            (RatFun(N * N - 1, N - 1), RatFun(2 * N + 2, MultiPoly.const(2))),
            (RatFun(K * N + K, N + 1), RatFun(K, ONE)),
        ]
        for f, g in pairs:
            assert ratfun_equal(f, g)
            assert (ratfun_normalize(f).to_str()
                    == ratfun_normalize(g).to_str())
        f, g = RatFun(N, K), RatFun(K, N)
        assert not ratfun_equal(f, g)
        assert ratfun_normalize(f).to_str() != ratfun_normalize(g).to_str()


# -- randomized structure tests ------------------------------------------

def polys(max_terms=4, max_exp=3):
    coeff = st.integers(min_value=-10 ** 6, max_value=10 ** 6)
    expo = st.tuples(*(st.integers(0, max_exp) for _ in range(2)),
                     *(st.just(0) for _ in range(3)))
    term = st.tuples(expo, coeff)
    return st.lists(term, min_size=0, max_size=max_terms).map(
        lambda items: MultiPoly({e: Fraction(c) for e, c in items if c}))


@settings(max_examples=60, derandomize=True, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f


@settings(max_examples=40, derandomize=True, deadline=None)
@given(polys(max_terms=3, max_exp=2), polys(max_terms=3, max_exp=2),
       st.integers(-6, 6), st.integers(-6, 6))
def test_normalize_preserves_evaluation(f, g, nv, kv):
    if g.is_zero():
        return
    quot = ratfun_normalize(RatFun(f, g))
    point = {"n": Fraction(nv), "k": Fraction(kv)}
    if g.eval(point) == 0 or quot.den.eval(point) == 0:
        return
    assert ratfun_eval(quot, point) == f.eval(point) / g.eval(point)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(polys(max_terms=3, max_exp=2), polys(max_terms=3, max_exp=2))
def test_gcd_divides_both(f, g):
    d = poly_gcd(f, g)
    if d.is_zero():
        assert f.is_zero() and g.is_zero()
        return
    # d | f and d | g exactly
    for p in (f, g):
        if p.is_zero():
            continue
        q = ratfun_normalize(RatFun(p, d))
        assert q.den.is_const()


def test_gcd_direct():
    d = poly_gcd((N + A) ** 2, (N + A) * (N - A))
    assert ratfun_equal(RatFun(d, ONE), RatFun(N + A, ONE))
    assert poly_gcd(MultiPoly.const(6), MultiPoly.const(4)) == \
        MultiPoly.const(2)


class TestSubstitution:
    def test_shift_var(self):
        p = (K + 1) ** 2
        assert p.shift_var("k", 1) == (K + 2) ** 2

    def test_rename(self):
        p = K ** 2 + 3 * K
        q = p.rename_var("k", "j")
        J = MultiPoly.var("j")
        assert q == J ** 2 + 3 * J

    def test_subs_consts(self):
        p = N * K + A
        out = p.subs_consts({"n": Fraction(2), "a": Fraction(1, 2)})
        assert out == 2 * K + MultiPoly.const(Fraction(1, 2))


class TestUnivariateSignAnalysis:
    def test_count_roots_above(self):
        # (x-1)(x-3)(x-10) has three roots above 0, one above 5
        coeffs = [Fraction(-30), Fraction(43), Fraction(-14), Fraction(1)]
        assert count_roots_above(coeffs, Fraction(0)) == 3
        assert count_roots_above(coeffs, Fraction(5)) == 1
        assert count_roots_above(coeffs, Fraction(11)) == 0

    def test_positive_on_ray(self):
        assert positive_on_ray([Fraction(1), Fraction(0), Fraction(1)],
                               Fraction(0))   # x^2 + 1
        assert not positive_on_ray([Fraction(-30), Fraction(43),
                                    Fraction(-14), Fraction(1)], Fraction(2))
        assert positive_on_ray([Fraction(-30), Fraction(43),
                                Fraction(-14), Fraction(1)], Fraction(11))


def test_serialization_graded_lex_order():
    p = N ** 2 + K * N * 3 + MultiPoly.const(7) + A ** 3
    # graded-lex descending: a^3 first (deg 3), then n^2, 3nk, then 7
    assert p.to_str() == "1*a^3 + 1*n^2 + 3*n*k + 7"
