from fractions import Fraction

import pytest

from hyperaccel.certify import (
    Certificate,
    CheckMode,
    FFamily,
    check_certificate,
    f_shift_ratios,
    g_at_zero,
    tail_condition,
    theorem1_certificate,
)
from hyperaccel.exact import MultiPoly, PoleError, ratfun_eval
from hyperaccel.hyperterm import RawF, pochhammer

H = Fraction(1, 2)
POINT = {"n": Fraction(3, 2), "k": Fraction(0), "a": H, "b": Fraction(0)}


def _poch(x, m):
    out = Fraction(1)
    for i in range(m):
        out *= x + i
    return out


def direct_f(a, b, n, k):
    return (_poch(a, k + b) / _poch(1 + n - a, k + b)) ** 4 \
        * (n + 2 * k + 2 * b)


class TestShiftRatios:
    def test_sigma_k_value(self):
        _, sigma_k = f_shift_ratios(FFamily())
        assert ratfun_eval(sigma_k, POINT) == Fraction(7, 768)

    def test_sigma_n_value(self):
        sigma_n, _ = f_shift_ratios(FFamily())
        assert ratfun_eval(sigma_n, POINT) == Fraction(5, 3)

    def test_sigma_matches_direct_quotients(self):
        sigma_n, sigma_k = f_shift_ratios(FFamily())
        for (a, b, n, k) in [(H, 0, Fraction(3, 2), 3),
                             (Fraction(-1, 2), 2, Fraction(5, 2), 1),
                             (Fraction(1), 1, Fraction(2), 4)]:
            pt = {"n": Fraction(n), "k": Fraction(k), "a": Fraction(a),
                  "b": Fraction(b)}
            assert ratfun_eval(sigma_n, pt) == \
                direct_f(a, b, n + 1, k) / direct_f(a, b, n, k)
            assert ratfun_eval(sigma_k, pt) == \
                direct_f(a, b, n, k + 1) / direct_f(a, b, n, k)

    def test_sigma_pole(self):
        _, sigma_k = f_shift_ratios(FFamily())
        # n + 2k + 2b = 0 is a pole of the ratio
        with pytest.raises(PoleError):
            ratfun_eval(sigma_k, {"n": Fraction(2), "k": Fraction(-1),
                                  "a": H, "b": Fraction(0)})


class TestCertificateValues:
    def test_r_value(self):
        cert = theorem1_certificate()
        assert ratfun_eval(cert.R, POINT) == Fraction(232, 3)

    def test_p2_value(self):
        cert = theorem1_certificate()
        assert cert.p2.eval(POINT) == -64

    def test_p1_value(self):
        cert = theorem1_certificate()
        assert cert.p1.eval(POINT) == Fraction(-243, 32)


class TestCheckCertificate:
    def test_symbolic_holds(self):
        assert check_certificate(FFamily(), theorem1_certificate(),
                                 CheckMode.SYMBOLIC).ok

    def test_randomized_holds(self):
        res = check_certificate(FFamily(), theorem1_certificate(),
                                CheckMode.RANDOMIZED, points=200, seed=42)
        assert res.ok

    def test_two_sided_evaluation_at_base_point(self):
        cert = theorem1_certificate()
        sigma_n, sigma_k = f_shift_ratios(FFamily())
        lhs = cert.p1.eval(POINT) * ratfun_eval(sigma_n, POINT) \
            + cert.p2.eval(POINT)
        rhs = ratfun_eval(cert.R.shift_var("k", 1), POINT) \
            * ratfun_eval(sigma_k, POINT) - ratfun_eval(cert.R, POINT)
        assert lhs == rhs

    def test_exponent_perturbation_fails(self):
        N = MultiPoly.var("n")
        A = MultiPoly.var("a")
        bad = Certificate(R=theorem1_certificate().R,
                          p1=(2 * A - N - 1) ** 4,
                          p2=theorem1_certificate().p2)
        assert not check_certificate(FFamily(), bad, CheckMode.SYMBOLIC).ok

    def test_perturbations_fail_in_both_modes(self):
        fam = FFamily()
        for cert in perturbed_certificates():
            sym = check_certificate(fam, cert, CheckMode.SYMBOLIC)
            rnd = check_certificate(fam, cert, CheckMode.RANDOMIZED,
                                    points=200, seed=7)
            assert not sym.ok
            assert not rnd.ok
            assert sym.ok == rnd.ok

    def test_modes_agree_on_genuine(self):
        fam = FFamily()
        cert = theorem1_certificate()
        assert check_certificate(fam, cert, CheckMode.SYMBOLIC).ok == \
            check_certificate(fam, cert, CheckMode.RANDOMIZED,
                              points=60, seed=3).ok


def perturbed_certificates(count=20):
    """Deterministic single-coefficient perturbations of the certificate."""
    base = theorem1_certificate()
    out = []
    pieces = [("p1", base.p1), ("p2", base.p2),
              ("Rn", base.R.num), ("Rd", base.R.den)]
    idx = 0
    while len(out) < count:
        which, poly = pieces[idx % len(pieces)]
        monomials = sorted(poly.terms)
        expo = monomials[(idx * 3) % len(monomials)]
        bumped = poly + MultiPoly({expo: Fraction(1)})
        if which == "p1":
            out.append(Certificate(R=base.R, p1=bumped, p2=base.p2))
        elif which == "p2":
            out.append(Certificate(R=base.R, p1=base.p1, p2=bumped))
        elif which == "Rn":
            from hyperaccel.exact import RatFun
            out.append(Certificate(R=RatFun(bumped, base.R.den),
                                   p1=base.p1, p2=base.p2))
        else:
            from hyperaccel.exact import RatFun
            out.append(Certificate(R=RatFun(base.R.num, bumped),
                                   p1=base.p1, p2=base.p2))
        idx += 1
    return out


class TestGAtZero:
    def test_base_case(self):
        assert g_at_zero(RawF(H, 0, Fraction(3, 2))) == 116

    def test_b_zero_structural(self):
        # with b = 0, F(n, 0) = n, so G(n, 0) = R(n, 0) * n
        cert = theorem1_certificate()
        for (a, n) in [(H, Fraction(5, 2)), (Fraction(-1, 2), Fraction(2)),
                       (Fraction(1, 3), Fraction(3))]:
            pt = {"n": n, "k": Fraction(0), "a": a, "b": Fraction(0)}
            assert g_at_zero(RawF(a, 0, n)) == ratfun_eval(cert.R, pt) * n

    def test_shifted_against_direct_oracle(self):
        a, b, n = H, 1, Fraction(3, 2)
        cert = theorem1_certificate()
        pt = {"n": n, "k": Fraction(0), "a": a, "b": Fraction(b)}
        oracle = ratfun_eval(cert.R, pt) * direct_f(a, b, n, 0)
        got = g_at_zero(RawF(a, b, n))
        assert got == oracle
        assert got == Fraction(65, 64)


class TestTailCondition:
    def test_examples(self):
        assert tail_condition(H, Fraction(3, 2))
        assert not tail_condition(1, Fraction(3, 2))  # exactly on boundary
        assert tail_condition(Fraction(-1, 2), H)

    def test_matches_decay_exponent(self):
        # a < (2n+1)/4 iff the decay exponent 8a - 4n - 3 < -1
        vals = [Fraction(x, 4) for x in range(-8, 9)]
        for a in vals:
            for n in vals:
                assert tail_condition(a, n) == (8 * a - 4 * n - 3 < -1)


class TestTelescoping:
    def test_partial_sums_collapse(self):
        # sum_{kap=0}^{k} [p1 F(n+1,kap) + p2 F(n,kap)] = G(n,k+1) - G(n,0)
        a, b, n = H, 0, Fraction(3, 2)
        cert = theorem1_certificate()
        p1 = cert.p1.eval({"n": n, "a": a, "k": Fraction(0),
                           "b": Fraction(b)})
        p2 = cert.p2.eval({"n": n, "a": a, "k": Fraction(0),
                           "b": Fraction(b)})

        def g(kv):
            pt = {"n": n, "k": Fraction(kv), "a": a, "b": Fraction(b)}
            return ratfun_eval(cert.R, pt) * direct_f(a, b, n, kv)

        total = Fraction(0)
        g0 = g(0)
        for k in range(0, 101):
            total += p1 * direct_f(a, b, n + 1, k) + p2 * direct_f(a, b, n, k)
            assert total == g(k + 1) - g0, k
