from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hyperaccel.catalog import builtin_catalog, by_id
from hyperaccel.exact import PoleError, ratfun_equal, RatFun, MultiPoly
from hyperaccel.hyperterm import (
    CannotBoundError,
    RawF,
    UnsupportedSpecError,
    asymptotic_rate,
    pochhammer,
    series_spec,
    shift_normalize,
    tail_bound,
    term_ratio,
    term_value,
)

H = Fraction(1, 2)


class TestPochhammer:
    def test_half_cubed(self):
        assert pochhammer(H, 3) == Fraction(15, 8)

    def test_zero_index(self):
        for x in (Fraction(7, 3), Fraction(-2), Fraction(0)):
            assert pochhammer(x, 0) == 1

    def test_negative_index(self):
        assert pochhammer(H, -1) == -2

    def test_negative_index_pole(self):
        with pytest.raises(PoleError):
            pochhammer(Fraction(1), -1)

    @settings(max_examples=80, derandomize=True, deadline=None)
    @given(st.fractions(min_value=-8, max_value=8, max_denominator=6),
           st.integers(-20, 20))
    def test_recurrence(self, a, m):
        # (a)_{m+1} = (a)_m * (a + m) wherever both sides are defined
        try:
            lhs = pochhammer(a, m + 1)
            rhs = pochhammer(a, m) * (a + m)
        except PoleError:
            return
        assert lhs == rhs


class TestTermValue:
    def test_quintic_rate_quarter_first_terms(self):
        spec = by_id()["guillera-m14"].series
        assert term_value(spec, 0) == 1
        assert term_value(spec, 1) == Fraction(-29, 128)

    def test_glaisher_term(self):
        spec = by_id()["glaisher"].series
        assert term_value(spec, 1) == Fraction(-3, 16)


class TestTermRatio:
    def test_quintic_symbolic_form(self):
        spec = by_id()["guillera-m14"].series
        K = MultiPoly.var("k")
        expected = RatFun(
            Fraction(-1, 4) * (K + H) ** 5 * (20 * K ** 2 + 48 * K + 29),
            (K + 1) ** 5 * (20 * K ** 2 + 8 * K + 1))
        assert ratfun_equal(term_ratio(spec), expected)
        assert term_ratio(spec).eval({"k": Fraction(0)}) == Fraction(-29, 128)

    def test_pure_geometric(self):
        spec = series_spec(1, Fraction(1, 3), [], [], [1])
        assert ratfun_equal(term_ratio(spec), RatFun(MultiPoly.const(1),
                                                     MultiPoly.const(3)))

    def test_glaisher_form(self):
        spec = by_id()["glaisher"].series
        K = MultiPoly.var("k")
        expected = RatFun((K - H) ** 4 * (-4 * K - 3),
                          (K + 1) ** 4 * (1 - 4 * K))
        assert ratfun_equal(term_ratio(spec), expected)

    def test_catalog_ratio_consistency_to_200(self):
        # term_value(k+1) = term_value(k) * ratio(k) exactly for every entry
        for entry in builtin_catalog():
            ratio = term_ratio(entry.series)
            t = term_value(entry.series, entry.series.start)
            for k in range(entry.series.start, entry.series.start + 200):
                nxt = term_value(entry.series, k + 1)
                if t != 0:
                    assert nxt == t * ratio.eval({"k": Fraction(k)}), \
                        (entry.id, k)
                t = nxt


class TestAsymptoticRate:
    def test_rates(self):
        cat = by_id()
        assert asymptotic_rate(cat["guillera-1024"].series) == \
            Fraction(-1, 1024)
        assert asymptotic_rate(cat["glaisher"].series) == 1
        assert asymptotic_rate(cat["au-427"].series) == Fraction(4, 27)

    def test_unbalanced_rejected(self):
        with pytest.raises(UnsupportedSpecError):
            series_spec(1, Fraction(1, 2), [H, H], [1], [1])


class TestShiftNormalize:
    @staticmethod
    def direct_f(a, b, n, k):
        # independent product-form evaluation of the shifted term family
        def poch(x, m):
            if m >= 0:
                out = Fraction(1)
                for i in range(m):
                    out *= x + i
                return out
            out = Fraction(1)
            for i in range(1, -m + 1):
                out *= x - i
            return 1 / out
        return (poch(a, k + b) / poch(1 + n - a, k + b)) ** 4 \
            * (n + 2 * k + 2 * b)

    def test_base_case(self):
        spec = shift_normalize(RawF(H, 0, Fraction(3, 2)))
        assert spec.prefactor == 1
        assert spec.num_params == (H,) * 4
        assert spec.den_params == (Fraction(2),) * 4
        assert spec.factor_num.as_univariate("k") == [Fraction(3, 2),
                                                      Fraction(2)]
        # doubled, this is the (4k+3) display
        assert 2 * term_value(spec, 0) == 3

    def test_shift_one(self):
        spec = shift_normalize(RawF(H, 1, Fraction(3, 2)))
        assert spec.prefactor == Fraction(1, 256)
        assert spec.num_params == (Fraction(3, 2),) * 4
        assert spec.den_params == (Fraction(3),) * 4
        assert spec.factor_num.as_univariate("k") == [Fraction(7, 2),
                                                      Fraction(2)]

    def test_zero_shift_prefactor_one(self):
        for a, n in ((H, Fraction(5, 2)), (Fraction(-1, 2), Fraction(7, 2))):
            assert shift_normalize(RawF(a, 0, n)).prefactor == 1

    def test_round_trip_grid(self):
        # 50+ admissible triples, exact match against the direct product
        a_vals = [Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 4), H,
                  Fraction(1), Fraction(3, 2)]
        b_vals = [-2, -1, 0, 1, 2, 3]
        n_vals = [H, Fraction(1), Fraction(3, 2), Fraction(5, 2),
                  Fraction(7, 2)]
        checked = 0
        for a in a_vals:
            for b in b_vals:
                for n in n_vals:
                    if a >= (2 * n + 1) / 4:
                        continue
                    try:
                        spec = shift_normalize(RawF(a, b, n))
                    except (PoleError, Exception):
                        continue
                    for k in range(0, 51, 7):
                        assert term_value(spec, k) == \
                            self.direct_f(a, b, n, k), (a, b, n, k)
                    checked += 1
        assert checked >= 50


class TestTailBound:
    def test_quintic_monotone_bound(self):
        spec = by_id()["guillera-m14"].series
        bound = tail_bound(spec, 100)
        # the ratio bound beyond k=100 is below 0.26
        t100 = abs(term_value(spec, 100))
        assert bound <= t100 / (1 - Fraction(26, 100))
        assert bound > 0

    def test_pure_geometric_exact(self):
        spec = series_spec(1, H, [], [], [1])
        # sum_{k>=10} (1/2)^k = 2 * (1/2)^10 = |T(10)| / (1 - 1/2)
        assert tail_bound(spec, 10) == 2 * abs(term_value(spec, 10))

    def test_rate_one_cannot_bound(self):
        spec = by_id()["glaisher"].series
        for M in (5, 50):
            with pytest.raises(CannotBoundError):
                tail_bound(spec, M)

    def test_soundness_on_catalog(self):
        # |sum_{k=M}^{M+500} T(k)| <= tail_bound(spec, M), exact arithmetic
        for entry in builtin_catalog():
            if abs(entry.expected_rate) >= 1:
                continue
            spec = entry.series
            ratio = term_ratio(spec)
            for M in (10, 50):
                bound = tail_bound(spec, M)
                t = term_value(spec, M)
                total = t
                for k in range(M, M + 500):
                    t *= ratio.eval({"k": Fraction(k)})
                    total += t
                assert abs(total) <= bound, (entry.id, M)
