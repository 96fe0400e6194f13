"""Plain-data rendering of reports for JSON output and text summaries.

Field names produced here are a stable interface; see the README for the
list.  Rationals are written as ``"p/q"`` strings, polynomials as integer
coefficient lists in ascending degree, and every mapping is emitted with
sorted keys so the same input always gives the same bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .growth import GrowthReport
from .polyalg import IntPolynomial, RationalFunction
from .polyhedron import AndreevReport, IdentityCheck, Theorem3Report, VertexCensus


def fraction_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal_floor(x: Fraction, digits: int) -> str:
    """x rounded toward minus infinity to ``digits`` places after the point."""
    scale = 10**digits
    n = (Fraction(x) * scale).__floor__()
    return _render_scaled(n, digits)


def decimal_ceil(x: Fraction, digits: int) -> str:
    scale = 10**digits
    n = (Fraction(x) * scale).__ceil__()
    return _render_scaled(n, digits)


def _render_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def certified_digits(lo: Fraction, hi: Fraction, digits: int) -> str:
    """Longest decimal prefix shared by every number in [lo, hi], at most ``digits`` places."""
    a, b = decimal_floor(lo, digits), decimal_floor(hi, digits)
    if lo == hi:
        return a
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    prefix = a[:k]
    return prefix.rstrip(".") if prefix.endswith(".") else prefix


def poly_data(p: Optional[IntPolynomial]):
    return None if p is None else list(p.coeffs)


def ratfun_data(f: RationalFunction) -> dict:
    return {"num": list(f.num.coeffs), "den": list(f.den.coeffs)}


def interval_data(lo, hi, digits: int) -> dict:
    return {
        "lo": fraction_str(lo),
        "hi": fraction_str(hi),
        "exact": lo == hi,
        "lo_decimal": decimal_floor(lo, digits),
        "hi_decimal": decimal_ceil(hi, digits),
        "certified_digits": certified_digits(lo, hi, digits),
    }


def growth_report_data(rep: GrowthReport, digits: int = 30) -> dict:
    out = {
        "growth_function": ratfun_data(rep.growth_function),
        "degenerate": rep.degenerate,
        "denominator_normal_form": poly_data(rep.denominator_normal_form),
        "ku_verdict": rep.ku_verdict,
        "ku_reason": rep.ku_reason,
        "perron_verdict": rep.perron_verdict,
        "pisot_advisory": rep.pisot_advisory,
        "radius_interval": None,
        "rate_interval": None,
        "modulus_gap": None if rep.modulus_gap is None else f"{rep.modulus_gap:.6e}",
        "numeric_root_count": rep.numeric_root_count,
        "notes": list(rep.notes),
    }
    if rep.radius_interval is not None:
        iv = rep.radius_interval
        out["radius_interval"] = interval_data(iv.lo, iv.hi, digits)
        out["radius_interval"]["multiplicity"] = iv.multiplicity_hint
        out["rate_interval"] = interval_data(rep.rate_interval[0], rep.rate_interval[1], digits)
    return out


def census_data(c: VertexCensus) -> dict:
    return {
        "F": c.F,
        "E": c.E,
        "V": c.V,
        "vertices": [{"signature": list(s), "count": n} for s, n in sorted(c.vertex_counts.items())],
        "edges": [{"label": m, "count": n} for m, n in sorted(c.edge_counts.items())],
        "cusps": c.cusps,
        "k": c.k,
    }


def identity_data(checks) -> list:
    return [
        {"name": ch.name, "lhs": _num(ch.lhs), "rhs": _num(ch.rhs), "relation": ch.relation, "passed": ch.passed}
        for ch in checks
    ]


def _num(x):
    if isinstance(x, Fraction):
        return fraction_str(x)
    return x


def andreev_data(rep: AndreevReport) -> dict:
    return {
        "partial": rep.partial,
        "passed": rep.passed,
        "conditions": {k: {"passed": ok, "witnesses": _plain(w)} for k, (ok, w) in sorted(rep.conditions.items())},
    }


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, Fraction):
        return fraction_str(x)
    return x


def theorem3_data(rep: Optional[Theorem3Report]):
    if rep is None:
        return None
    return {
        "k": rep.k,
        "F": rep.F,
        "bound_holds": rep.bound_holds,
        "equality": rep.equality,
        "equality_census_ok": rep.equality_census_ok,
        "passed": rep.passed,
    }


def proof_record_data(rec) -> dict:
    return {
        "name": rec.name,
        "params": _plain_dict(rec.params),
        "passed": rec.passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rec.checks],
    }


def _plain_dict(d: dict) -> dict:
    return {k: _plain(v) for k, v in d.items()}


def dumps(data) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


# text rendering


def format_growth_text(rep: GrowthReport, digits: int = 30) -> list:
    lines = [f"growth function: {rep.growth_function}"]
    if rep.degenerate:
        lines.append("finite group: growth rate is degenerate")
        return lines
    if rep.denominator_normal_form is not None:
        lines.append(f"denominator normal form: {rep.denominator_normal_form}")
    lines.append(f"KU criterion: {rep.ku_verdict}" + (f" ({rep.ku_reason})" if rep.ku_reason else ""))
    if rep.rate_interval is not None:
        lo, hi = rep.rate_interval
        lines.append(f"growth rate: {certified_digits(lo, hi, digits)}")
        lines.append(f"  certified interval [{decimal_floor(lo, digits)}, {decimal_ceil(hi, digits)}]")
        lines.append(f"  exact bounds [{fraction_str(lo)}, {fraction_str(hi)}]")
    lines.append(f"Perron: {rep.perron_verdict}")
    lines.append(f"Pisot (advisory): {rep.pisot_advisory}")
    if rep.modulus_gap is not None:
        lines.append(f"modulus gap: {rep.modulus_gap:.6e}")
    lines.extend(f"note: {n}" for n in rep.notes)
    return lines


def format_identity_text(checks: list[IdentityCheck]) -> list:
    return [f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {_num(c.lhs)} {c.relation} {_num(c.rhs)}" for c in checks]
