"""Registry of the displayed series, with targets, rates and citations.

The file format is UTF-8 text, one record per stanza, stanzas separated by
blank lines, each line `key = value`:

    id          short unique string
    prefactor   rational, optional (default 1)
    z           rational ratio
    num / den   comma-separated rational parameter lists (balanced)
    poly        ascending rational coefficients of the numerator factor
    factor_den  ascending coefficients of the denominator factor (optional)
    start       integer (default 0)
    target      "<rational> * <base> [+ <rational>]",
                base in {1, 1/pi, 1/pi^2, pi^2, zeta3}; optional
    rate        declared convergence rate; must equal the computed one
    cite        non-empty source note (original reference + polynomial)
    note        free text (optional)

save() emits records in a fixed key order with canonical rational strings,
so save . load is the identity byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .hyperterm import (
    Base,
    SeriesSpec,
    TargetConstant,
    asymptotic_rate,
    series_spec,
)


class CatalogError(ValueError):
    """Parse or validation failure; message carries record/line context."""


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    series: SeriesSpec
    target: Optional[TargetConstant]
    expected_rate: Fraction
    citation: str
    note: str = ""

    def __post_init__(self):
        if not self.id:
            raise CatalogError("entry id must be non-empty")
        if not self.citation:
            raise CatalogError(f"entry {self.id!r}: citation must be non-empty")
        computed = asymptotic_rate(self.series)
        if computed != self.expected_rate:
            raise CatalogError(
                f"entry {self.id!r}: declared rate {self.expected_rate} "
                f"differs from computed rate {computed}")


def _entry(id, z, num, den, poly, target, cite, prefactor=1,
           factor_den=None, note=""):
    spec = series_spec(prefactor, z, num, den, poly,
                       factor_den_coeffs=factor_den, target=target)
    return CatalogEntry(id=id, series=spec, target=target,
                        expected_rate=Fraction(z), citation=cite, note=note)


def _t(coeff, base, addend=0):
    return TargetConstant(Fraction(coeff), base, Fraction(addend))


H = Fraction(1, 2)

_JK_NOTE = ("transcription: source displays the summand polynomial in j "
            "under a sum over k; read with j = k (verified numerically)")


def builtin_catalog():
    """Every displayed series, in a stable order."""
    E = []
    E.append(_entry(
        "ramanujan-6k1", Fraction(1, 4), [H, H, H], [1, 1, 1], [1, 6],
        _t(4, Base.INV_PI), "Ramanujan 1914; (6k+1)"))
    E.append(_entry(
        "ramanujan-20k3", Fraction(-1, 4),
        [Fraction(1, 4), H, Fraction(3, 4)], [1, 1, 1], [3, 20],
        _t(8, Base.INV_PI), "Ramanujan 1914; (20 k + 3)"))
    E.append(_entry(
        "glaisher", Fraction(1), [-H, -H, -H, -H], [1, 1, 1, 1], [1, -4],
        _t(8, Base.INV_PI2), "Glaisher 1905; (1 - 4k)",
        note="rate 1: verified through the exact partial-sum identity, "
             "not by truncation"))
    E.append(_entry(
        "firstknown", Fraction(1, 16),
        [Fraction(1, 4), H, H, H, Fraction(3, 4)], [1] * 5, [3, 34, 120],
        _t(32, Base.INV_PI2), "Guillera 2002; 120 k^2 + 34 k + 3"))
    E.append(_entry(
        "guillera-1024", Fraction(-1, 1024), [H] * 5, [1] * 5,
        [13, 180, 820], _t(128, Base.INV_PI2),
        "Guillera 2002; 820 k^2 + 180 k + 13"))
    E.append(_entry(
        "guillera-m14", Fraction(-1, 4), [H] * 5, [1] * 5, [1, 8, 20],
        _t(8, Base.INV_PI2), "Guillera 2006; 20 k^2 + 8 k + 1"))
    E.append(_entry(
        "guillera-2764", Fraction(27, 64),
        [Fraction(1, 3), H, H, H, Fraction(2, 3)], [1] * 5, [3, 27, 74],
        _t(48, Base.INV_PI2), "Guillera 2011; 74 k^2 + 27 k + 3"))
    E.append(_entry(
        "cz-quadratic", Fraction(-1, 4), [H] * 5, [1, 2, 2, 2, 2],
        [13, 32, 20], _t(128, Base.INV_PI2),
        "Chu-Zhang 2014; 20 k^2 + 32 k + 13"))
    E.append(_entry(
        "cz-cubic", Fraction(-1, 4),
        [H, H, H, Fraction(3, 2), Fraction(3, 2)], [1, 2, 2, 2, 2],
        [27, 94, 108, 40], _t(256, Base.INV_PI2),
        "Chu-Zhang 2014; 40k^3 + 108k^2 + 94 k + 27"))
    E.append(_entry(
        "cz-118", Fraction(1, 16),
        [Fraction(-1, 4), Fraction(1, 4), H, H, H], [1, 1, 1, 2, 2],
        [13, 118, 120], _t(128, Base.INV_PI2),
        "Chu-Zhang 2014; 120 k^2 + 118k + 13"))
    E.append(_entry(
        "cz-quartic", Fraction(-1, 27),
        [Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), H,
         Fraction(3, 4), Fraction(3, 4), Fraction(3, 4)],
        [1, 1, 1, 1, 1, Fraction(4, 3), Fraction(5, 3)],
        [27, 492, 3376, 8832, 7168], _t(256, Base.INV_PI2),
        "Chu-Zhang 2014; 7168 k^4 + 8832 k^3",
        note="displayed twice verbatim in the source; stored once"))
    E.append(_entry(
        "cz-1640a", Fraction(-1, 1024),
        [-H, H, H, Fraction(3, 2), Fraction(3, 2)], [1, 1, 1, 2, 2],
        [207, 2046, 3476, 1640], _t(2048, Base.INV_PI2),
        "Chu-Zhang 2014; 1640 k^3 + 3476 k^2 + 2046 k + 207"))
    E.append(_entry(
        "cz-1640b", Fraction(-1, 1024),
        [-H, H, H, Fraction(5, 2), Fraction(5, 2)], [1, 2, 2, 2, 2],
        [1475, 4614, 4788, 1640], _t(Fraction(131072, 9), Base.INV_PI2),
        "Chu-Zhang 2014; 1640 k^3 + 4788 k^2 + 4614 k + 1475"))
    E.append(_entry(
        "chu-16a", Fraction(1, 16),
        [-H, Fraction(1, 4), H, Fraction(3, 4), Fraction(3, 2)],
        [1, 1, 1, 2, 2], [9, 80, 148, 80],
        _t(Fraction(256, 3), Base.INV_PI2),
        "Chu 2023; 80k^3 + 148 k^2 + 80k + 9"))
    E.append(_entry(
        "chu-16b", Fraction(1, 16),
        [H, H, Fraction(3, 4), Fraction(5, 4), Fraction(3, 2)],
        [1, 1, 1, 2, 2], [45, 336, 532, 240], _t(512, Base.INV_PI2),
        "Chu 2023; 240 k^3 + 532 k^2 + 336 k + 45"))
    E.append(_entry(
        "campbell-levrie", Fraction(-1, 4), [H] * 5, [1, 3, 3, 3, 3],
        [41, 56, 20], _t(Fraction(2 ** 15, 81), Base.INV_PI2),
        "Levrie-Campbell 2022; 20 k^2+56 k+41"))
    E.append(_entry(
        "au-427", Fraction(4, 27), [H] * 7,
        [Fraction(7, 6), Fraction(5, 6), 1, 1, 1, 1, 1], [1, 12, 54, 92],
        _t(12, Base.INV_PI2), "Au 2025; 92 k^3 + 54k^2 + 12 k + 1"))
    E.append(_entry(
        "t1-b4", Fraction(-1, 4), [H] * 5, [1, 4, 4, 4, 4], [17, 16, 4],
        _t(Fraction(2 ** 19, 5 ** 5), Base.INV_PI2),
        "single acceleration at (a,b,n)=(-1/2,4,1/2); 4 k^2+16 k+17"))
    E.append(_entry(
        "t1-b5", Fraction(-1, 4), [H] * 5, [1, 5, 5, 5, 5], [145, 104, 20],
        _t(Fraction(2 ** 31, 5 ** 4 * 7 ** 4), Base.INV_PI2),
        "single acceleration at (a,b,n)=(-1/2,5,1/2); 20 k^2+104 k+145"))
    E.append(_entry(
        "motivating", Fraction(-1, 4), [Fraction(3, 2)] * 5,
        [1, 1, 1, 1, 2], [9, 24, 20], _t(-64, Base.INV_PI2),
        "single acceleration at (a,b,n)=(-1/2,0,7/2); 20 k^2+24 k+9"))
    E.append(_entry(
        "t1-bneg1", Fraction(-1, 4), [Fraction(5, 2)] * 5, [1, 1, 1, 1, 3],
        [5, 8, 4], _t(Fraction(1024, 15), Base.INV_PI2),
        "single acceleration at (a,b,n)=(-1/2,-1,5/2); 4 k^2+8 k+5"))
    E.append(_entry(
        "t1-bneg3a", Fraction(-1, 4), [Fraction(7, 2)] * 5, [1, 1, 1, 1, 4],
        [49, 56, 20], _t(Fraction(-8192, 5), Base.INV_PI2),
        "single acceleration at (a,b,n)=(-1/2,-3,3/2); 20 k^2+56 k+49"))
    E.append(_entry(
        "t1-bneg3b", Fraction(-1, 4), [Fraction(9, 2)] * 5, [1, 1, 1, 1, 5],
        [81, 72, 20], _t(Fraction(2 ** 18, 35), Base.INV_PI2),
        "single acceleration at (a,b,n)=(-1/2,-3,5/2); 20 k^2+72 k+81"))
    E.append(_entry(
        "motivating2", Fraction(-1, 1024), [-H, -H, -H, H, H], [1] * 5,
        [-1, -6, 8, 176, -528, 6560], _t(-8, Base.INV_PI2),
        "double acceleration at (a,b,n)=(1/2,0,3/2); "
        "6560 k^5-528 k^4+176 k^3"))
    E.append(_entry(
        "t2-deg6a", Fraction(-1, 1024), [-H, -H, -H, -H, Fraction(3, 2)],
        [1, 1, 1, 1, 2], [-99, -540, 2956, 17888, 36144, 34368, 13120],
        _t(-1024, Base.INV_PI2),
        "double acceleration at (a,b,n)=(1/2,0,5/2); 13120 j^6+34368 j^5",
        note=_JK_NOTE))
    E.append(_entry(
        "cz-rational-factor", Fraction(-1, 1024), [Fraction(3, 2)] * 5,
        [1, 1, 1, 1, 2], [729, 972, -1620, -4320, -2320, -2368, 13120],
        _t(-64, Base.INV_PI2),
        "double acceleration at (a,b,n)=(1/2,0,7/2); 13120 j^6-2368 j^5",
        factor_den=_poly_mul4([-3, 2], [-1, 2]),
        note=_JK_NOTE))
    E.append(_entry(
        "az-zeta3", Fraction(-1, 1024), [1] * 5, [Fraction(3, 2)] * 5,
        [77, 250, 205], _t(64, Base.ZETA3),
        "Amdeberhan-Zeilberger 1997; 205 k^2 + 250 k + 77"))
    E.append(_entry(
        "t2-81pi2", Fraction(-1, 1024), [H] * 5 + [1, 1, 1],
        [Fraction(5, 4)] * 4 + [Fraction(7, 4)] * 4,
        [50, 587, 2762, 6664, 8738, 5936, 1640],
        _t(Fraction(81, 16), Base.PI2),
        "double acceleration at (a,b,n)=(1,1,5/2); "
        "1640 k^6+5936 k^5+8738 k^4"))
    return E


def _poly_mul4(lin1, lin2):
    """Ascending coefficients of (lin1(k))^4 * (lin2(k))^4."""
    def mul(f, g):
        out = [Fraction(0)] * (len(f) + len(g) - 1)
        for i, ci in enumerate(f):
            for j, cj in enumerate(g):
                out[i + j] += Fraction(ci) * Fraction(cj)
        return out
    out = [Fraction(1)]
    for _ in range(4):
        out = mul(out, lin1)
    for _ in range(4):
        out = mul(out, lin2)
    return out


# ---------------------------------------------------------------------------
# Text serialization
# ---------------------------------------------------------------------------

_BASE_BY_TOKEN = {b.value: b for b in Base}


def format_target(t: TargetConstant) -> str:
    s = f"{t.coefficient} * {t.base.value}"
    if t.addend:
        s += f" + {t.addend}"
    return s


def parse_target(text: str) -> TargetConstant:
    parts = text.split("+")
    head = parts[0]
    if "*" not in head:
        raise CatalogError(f"bad target {text!r}: missing '*'")
    coeff_s, base_s = head.split("*", 1)
    base_s = base_s.strip()
    if base_s not in _BASE_BY_TOKEN:
        raise CatalogError(f"bad target base {base_s!r}")
    addend = Fraction(0)
    if len(parts) == 2:
        addend = Fraction(parts[1].strip())
    elif len(parts) > 2:
        raise CatalogError(f"bad target {text!r}: too many '+'")
    return TargetConstant(Fraction(coeff_s.strip()),
                          _BASE_BY_TOKEN[base_s], addend)


def _fmt_list(values) -> str:
    return ", ".join(str(Fraction(v)) for v in values)


def _parse_list(text: str):
    return tuple(Fraction(part.strip()) for part in text.split(","))


def format_entry(entry: CatalogEntry) -> str:
    s = entry.series
    lines = [f"id = {entry.id}"]
    if s.prefactor != 1:
        lines.append(f"prefactor = {s.prefactor}")
    lines.append(f"z = {s.ratio_z}")
    lines.append(f"num = {_fmt_list(s.num_params)}")
    lines.append(f"den = {_fmt_list(s.den_params)}")
    lines.append(f"poly = {_fmt_list(s.factor_num.as_univariate('k'))}")
    fden = s.factor_den.as_univariate("k")
    if fden != [Fraction(1)]:
        lines.append(f"factor_den = {_fmt_list(fden)}")
    if s.start != 0:
        lines.append(f"start = {s.start}")
    if entry.target is not None:
        lines.append(f"target = {format_target(entry.target)}")
    lines.append(f"rate = {entry.expected_rate}")
    lines.append(f"cite = {entry.citation}")
    if entry.note:
        lines.append(f"note = {entry.note}")
    return "\n".join(lines) + "\n"


def save(entries, path):
    text = "\n".join(format_entry(e) for e in entries)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def loads(text: str):
    """Parse catalog text into entries; errors carry the line number."""
    entries = []
    seen = set()
    record: dict = {}
    record_line = 0

    def flush(line_no):
        nonlocal record
        if not record:
            return
        entries.append(_record_to_entry(record, record_line))
        record = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            flush(line_no)
            continue
        if line.startswith("#"):
            continue
        if "=" not in line:
            raise CatalogError(f"line {line_no}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not record:
            record_line = line_no
        if key in record:
            raise CatalogError(f"line {line_no}: duplicate key {key!r}")
        record[key] = value
    flush(len(text.splitlines()) + 1)

    for e in entries:
        if e.id in seen:
            raise CatalogError(f"duplicate id {e.id!r}")
        seen.add(e.id)
    return entries


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def _record_to_entry(record: dict, line_no: int) -> CatalogEntry:
    try:
        entry_id = record["id"]
        num = _parse_list(record["num"])
        den = _parse_list(record["den"])
        if len(num) != len(den):
            raise CatalogError(
                f"record {entry_id!r} (line {line_no}): num/den length "
                f"mismatch ({len(num)} vs {len(den)})")
        poly = _parse_list(record["poly"])
        fden = (_parse_list(record["factor_den"])
                if "factor_den" in record else None)
        target = (parse_target(record["target"])
                  if "target" in record else None)
        spec = series_spec(
            Fraction(record.get("prefactor", "1")),
            Fraction(record["z"]), num, den, poly,
            factor_den_coeffs=fden,
            start=int(record.get("start", "0")),
            target=target)
        return CatalogEntry(
            id=entry_id,
            series=spec,
            target=target,
            expected_rate=Fraction(record["rate"]),
            citation=record["cite"],
            note=record.get("note", ""),
        )
    except KeyError as exc:
        raise CatalogError(
            f"record at line {line_no}: missing key {exc.args[0]!r}"
        ) from exc
    except CatalogError:
        raise
    except ValueError as exc:
        raise CatalogError(
            f"record at line {line_no}: {exc}") from exc


def by_id(entries=None) -> dict:
    if entries is None:
        entries = builtin_catalog()
    return {e.id: e for e in entries}
