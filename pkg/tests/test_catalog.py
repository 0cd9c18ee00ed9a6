from fractions import Fraction

import pytest

from hyperaccel.catalog import (
    CatalogEntry,
    CatalogError,
    builtin_catalog,
    by_id,
    format_entry,
    format_target,
    load,
    loads,
    parse_target,
    save,
)
from hyperaccel.hyperterm import (
    Base,
    TargetConstant,
    asymptotic_rate,
    term_value,
)

H = Fraction(1, 2)


def _poch(x, m):
    out = Fraction(1)
    for i in range(m):
        out *= x + i
    return out


def brute_force_term(entry, k):
    """Independent product-form evaluation of a catalog term."""
    s = entry.series
    t = Fraction(s.prefactor) * Fraction(s.ratio_z) ** k
    for u in s.num_params:
        t *= _poch(u, k)
    for v in s.den_params:
        t /= _poch(v, k)
    num = sum(c * Fraction(k) ** i
              for i, c in enumerate(s.factor_num.as_univariate("k")))
    den = sum(c * Fraction(k) ** i
              for i, c in enumerate(s.factor_den.as_univariate("k")))
    return t * num / den


class TestBuiltin:
    def test_size_and_unique_ids(self):
        entries = builtin_catalog()
        assert len(entries) >= 28
        ids = [e.id for e in entries]
        assert len(set(ids)) == len(ids)

    def test_declared_rates_match_computed(self):
        for e in builtin_catalog():
            assert asymptotic_rate(e.series) == e.expected_rate, e.id

    def test_citations_nonempty(self):
        for e in builtin_catalog():
            assert e.citation.strip()

    def test_first_terms_against_brute_force(self):
        for e in builtin_catalog():
            for k in range(0, 3):
                assert term_value(e.series, k) == brute_force_term(e, k), \
                    (e.id, k)

    def test_rate_1024_entry_fields(self):
        e = by_id()["guillera-1024"]
        s = e.series
        assert s.ratio_z == Fraction(-1, 1024)
        assert s.num_params == (H,) * 5
        assert s.den_params == (Fraction(1),) * 5
        assert s.factor_num.as_univariate("k") == [13, 180, 820]
        assert e.target == TargetConstant(Fraction(128), Base.INV_PI2)

    def test_rate_one_entry_fields(self):
        e = by_id()["glaisher"]
        assert e.series.ratio_z == 1
        assert e.series.num_params == (-H,) * 4
        assert e.series.factor_num.as_univariate("k") == [1, -4]
        assert e.target == TargetConstant(Fraction(8), Base.INV_PI2)

    def test_rational_factor_entry_fields(self):
        e = by_id()["cz-rational-factor"]
        s = e.series
        assert s.ratio_z == Fraction(-1, 1024)
        assert s.num_params == (Fraction(3, 2),) * 5
        assert s.den_params == (1, 1, 1, 1, 2)
        assert s.factor_num.as_univariate("k") == \
            [729, 972, -1620, -4320, -2320, -2368, 13120]
        # denominator factor is (2k-3)^4 (2k-1)^4
        assert s.factor_den.eval({"k": Fraction(0)}) == 81
        assert s.factor_den.eval({"k": Fraction(2)}) == 81
        assert e.target == TargetConstant(Fraction(-64), Base.INV_PI2)

    def test_duplicate_display_stored_once_with_note(self):
        entries = [e for e in builtin_catalog()
                   if e.series.factor_num.as_univariate("k")[-1] == 7168]
        assert len(entries) == 1
        assert "twice" in entries[0].note

    def test_index_transcription_notes(self):
        cat = by_id()
        for eid in ("t2-deg6a", "cz-rational-factor"):
            assert "transcription" in cat[eid].note


class TestTargetGrammar:
    def test_round_trip(self):
        targets = [
            TargetConstant(Fraction(128), Base.INV_PI2),
            TargetConstant(Fraction(4), Base.INV_PI),
            TargetConstant(Fraction(81, 16), Base.PI2),
            TargetConstant(Fraction(64), Base.ZETA3),
            TargetConstant(Fraction(-128), Base.INV_PI2, Fraction(16)),
            TargetConstant(Fraction(3, 7), Base.ONE),
        ]
        for t in targets:
            assert parse_target(format_target(t)) == t

    def test_bad_targets(self):
        for text in ("128", "2 * pi^3", "1 * 1/pi + 2 + 3"):
            with pytest.raises(CatalogError):
                parse_target(text)


class TestFileFormat:
    def test_round_trip_byte_identical(self, tmp_path):
        entries = builtin_catalog()
        p1 = tmp_path / "catalog.txt"
        p2 = tmp_path / "catalog2.txt"
        save(entries, p1)
        reloaded = load(p1)
        save(reloaded, p2)
        assert p1.read_bytes() == p2.read_bytes()
        assert [e.id for e in reloaded] == [e.id for e in entries]
        for a, b in zip(entries, reloaded):
            assert a.series == b.series
            assert a.target == b.target
            assert a.note == b.note

    def test_length_mismatch_names_record(self):
        text = ("id = broken\nz = -1/4\nnum = 1/2, 1/2\nden = 1\n"
                "poly = 1\nrate = -1/4\ncite = x\n")
        with pytest.raises(CatalogError, match="broken"):
            loads(text)

    def test_duplicate_id(self):
        record = ("id = dup\nz = 1/2\nnum = 1/2\nden = 1\npoly = 1\n"
                  "rate = 1/2\ncite = x\n")
        with pytest.raises(CatalogError, match="duplicate id"):
            loads(record + "\n" + record)

    def test_rate_mismatch_rejected(self):
        text = ("id = wrong\nz = -1/4\nnum = 1/2\nden = 1\npoly = 1\n"
                "rate = -1/2\ncite = x\n")
        with pytest.raises(CatalogError, match="rate"):
            loads(text)

    def test_missing_key_reports_line(self):
        text = "id = incomplete\nz = 1/2\n"
        with pytest.raises(CatalogError, match="line 1"):
            loads(text)

    def test_optional_target(self):
        text = ("id = gen\nz = -1/4\nnum = 3/2\nden = 1\npoly = 0, 1\n"
                "rate = -1/4\ncite = generated\n")
        (entry,) = loads(text)
        assert entry.target is None
