"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import report
from .catalog import load_catalog
from .coxeter import CoxeterParseError, parse_coxeter_graph, steinberg_growth
from .growth import (
    DegenerateGrowthError,
    analyze_growth,
    polyhedron_denominator_hints,
    pseudo_growth,
    rate_from_series,
)
from .polyalg import series_coefficients
from .polyhedron import (
    PolyhedronError,
    andreev_check,
    classify_vertices,
    coxeter_system_of,
    counting_identities,
    euler_valence_identity,
    format_polyhedron,
    large_label_slack,
    load_polyhedron,
    open_cusp,
    pinch,
    theorem3_bound,
)
from . import repro

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    precision: int = 30
    width_exp: int = 40
    terms: int = 200
    fmt: str = "text"

    def __post_init__(self):
        if self.fmt == "structured":
            self.fmt = "json"
        if self.precision < 1:
            raise InputError("--precision must be at least 1")
        if self.terms < 0:
            raise InputError("--terms must be nonnegative")
        if self.width_exp < 1:
            raise InputError("--width-exp must be at least 1")

    @property
    def width(self) -> Fraction:
        return Fraction(1, 2**self.width_exp)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_poly(path: str):
    try:
        return load_polyhedron(_read(path), Path(path).stem)
    except PolyhedronError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_graph(path: str):
    try:
        return parse_coxeter_graph(_read(path))
    except CoxeterParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(cfg: RunConfig, data: dict, lines: list, out) -> None:
    if cfg.fmt == "json":
        out.write(report.dumps(data))
    else:
        out.write("\n".join(lines) + "\n")


# subcommands


def cmd_growth_graph(cfg: RunConfig, out) -> int:
    path = cfg.inputs[0]
    sys_ = _load_graph(path)
    f = steinberg_growth(sys_)
    rep = analyze_growth(f, width=cfg.width)
    data = {"input": Path(path).name, "rank": sys_.rank, "growth": report.growth_report_data(rep, cfg.precision)}
    lines = [f"Coxeter graph {Path(path).name}: rank {sys_.rank}"] + report.format_growth_text(rep, cfg.precision)
    _emit(cfg, data, lines, out)
    return EXIT_OK


def polyhedron_report(P, cfg: RunConfig) -> tuple:
    """(data, text lines, all_checks_passed) for one polyhedron."""
    c = classify_vertices(P)
    hyperbolic = c.hyperbolic_vertices
    ids = [] if hyperbolic else counting_identities(c) + [euler_valence_identity(c)]
    andreev = andreev_check(P)
    t3 = theorem3_bound(P) if c.cusps else None
    f = pseudo_growth(P)
    steinberg = steinberg_growth(coxeter_system_of(P))
    rep = analyze_growth(f, width=cfg.width, hints=polyhedron_denominator_hints(P))
    data = {
        "name": P.name,
        "census": report.census_data(c),
        "hyperbolic_vertices": hyperbolic,
        "counting_identities": report.identity_data(ids),
        "andreev": report.andreev_data(andreev),
        "large_label_bound": report.theorem3_data(t3),
        "steinberg_agrees": f == steinberg,
        "growth": report.growth_report_data(rep, cfg.precision),
    }
    lines = [f"polyhedron {P.name}: F={c.F} E={c.E} V={c.V}"]
    lines.append("vertex types: " + ", ".join(f"{s}x{n}" for s, n in sorted(c.vertex_counts.items())))
    lines.append("edge labels: " + ", ".join(f"{m}x{n}" for m, n in sorted(c.edge_counts.items())))
    if hyperbolic:
        lines.append(f"hyperbolic vertices {hyperbolic}: counting identities skipped")
    else:
        lines.append("counting identities:")
        lines.extend(report.format_identity_text(ids))
    scope = "(a)-(c) only" if andreev.partial else "(a)-(f)"
    lines.append(f"Andreev {scope}: " + " ".join(f"{k}:{'ok' if ok else 'FAIL'}" for k, (ok, _) in sorted(andreev.conditions.items())))
    if t3 is None:
        lines.append("large-label bound: no cusp, not applicable")
    else:
        lines.append(f"large-label bound: k={t3.k} <= F-3={t3.F - 3}: {'holds' if t3.bound_holds else 'VIOLATED'}"
                     + (" (equality case, census ok)" if t3.equality and t3.equality_census_ok else ""))
    lines.append(f"pseudo growth agrees with Steinberg: {f == steinberg}")
    lines.extend(report.format_growth_text(rep, cfg.precision))
    ok = all(i.passed for i in ids) and (t3 is None or t3.passed) and f == steinberg
    return data, lines, ok


def cmd_growth_polyhedron(cfg: RunConfig, out) -> int:
    P = _load_poly(cfg.inputs[0])
    data, lines, _ = polyhedron_report(P, cfg)
    _emit(cfg, data, lines, out)
    return EXIT_OK


def cmd_series(cfg: RunConfig, out) -> int:
    path = cfg.inputs[0]
    if path.endswith(".poly"):
        f = pseudo_growth(_load_poly(path))
    else:
        f = steinberg_growth(_load_graph(path))
    coeffs = series_coefficients(f, cfg.terms)
    data = {"input": Path(path).name, "terms": cfg.terms, "coefficients": [int(a) for a in coeffs]}
    lines = [f"a_{k} = {a}" for k, a in enumerate(coeffs)]
    if cfg.terms >= 10:
        try:
            est = rate_from_series(f, cfg.terms)
            data["estimate"] = {"root": f"{est.root:.12g}", "ratio": f"{float(est.ratio):.12g}"}
            lines.append(f"a_N^(1/N) = {est.root:.12g}, a_N/a_(N-1) = {float(est.ratio):.12g}")
        except DegenerateGrowthError:
            data["estimate"] = None
            lines.append("series terminates: finite group")
    _emit(cfg, data, lines, out)
    return EXIT_OK


def cmd_transform(cfg: RunConfig, args, out) -> int:
    P = _load_poly(cfg.inputs[0])
    try:
        if args.pinch is not None:
            Q = pinch(P, tuple(args.pinch))
        else:
            Q = open_cusp(P, args.open, args.pairing, args.m)
    except PolyhedronError as exc:
        raise InputError(str(exc)) from None
    text = format_polyhedron(Q)
    before, after = classify_vertices(P), classify_vertices(Q)
    census = [
        f"before: F={before.F} E={before.E} V={before.V} {dict(sorted(before.vertex_counts.items()))}",
        f"after:  F={after.F} E={after.E} V={after.V} {dict(sorted(after.vertex_counts.items()))}",
    ]
    if args.output:
        Path(args.output).write_text(text)
        out.write("\n".join(census) + "\n")
    else:
        out.write(text)
        sys.stderr.write("\n".join(census) + "\n")
    return EXIT_OK


def parse_m_grid(text: str) -> list:
    """'7-12' or '7,9,11' or a mix such as '7-9,12'."""
    out = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                a, b = part.split("-", 1)
                out.update(range(int(a), int(b) + 1))
            elif part:
                out.add(int(part))
    except ValueError:
        raise InputError(f"bad --m-grid {text!r}") from None
    if not out or min(out) < 7:
        raise InputError("--m-grid values must be integers >= 7")
    return sorted(out)


def verify_paper_records(grid: Sequence[int], tamper: Optional[int] = None, width=Fraction(1, 2**40)) -> list:
    """Every proof record of the reproduction suite, in a fixed order."""
    catalog = load_catalog()
    records = []
    for name, P in catalog.items():
        c = classify_vertices(P)
        if all(2 <= m <= 6 for m in c.edge_counts):
            records.append(repro.h_identity(P))
    for name, P in catalog.items():
        big = repro.large_edges(P)
        if len(big) == 1:
            for m in grid:
                records.append(repro.angle_change_identity(P, big[0], m, tamper=tamper))
    for name, P in catalog.items():
        big = repro.large_edges(P)
        if big and large_label_slack(classify_vertices(P)) >= 0:
            records.append(repro.qk_recursion_check(P))
    for i, m1 in enumerate(grid):
        for m2 in grid[: i + 1]:
            records.append(repro.prop3_closed_forms(m1, m2))
    for m in grid:
        records.append(repro.prism_oracle_record(m))
    for m in grid:
        for variant in ("pyramid", "octahedron"):
            records.append(repro.theorem5_setting_check(m, variant))
    records.append(_perron_record(catalog, width))
    return records


def _perron_record(catalog: dict, width) -> "repro.ProofRecord":
    rec = repro.ProofRecord("Perron certification of the catalog", {"entries": len(catalog)})
    for name, P in catalog.items():
        rep = analyze_growth(pseudo_growth(P), width=width, hints=polyhedron_denominator_hints(P))
        ok = rep.perron_verdict == "perron_certified" and rep.rate_interval[0] > 1
        rec.add(f"{name}: certified Perron, rate > 1", ok, f"{rep.perron_verdict}, KU {rep.ku_verdict}")
    return rec


def cmd_verify_paper(cfg: RunConfig, args, out) -> int:
    grid = parse_m_grid(args.m_grid)
    records = verify_paper_records(grid, tamper=args.tamper, width=cfg.width)
    failed = [r for r in records if not r.passed]
    data = {
        "m_grid": grid,
        "passed": not failed,
        "records": [report.proof_record_data(r) for r in records],
    }
    lines = []
    for r in records:
        params = ", ".join(f"{k}={v}" for k, v in r.params.items())
        lines.append(f"[{'pass' if r.passed else 'FAIL'}] {r.name} ({params})")
        for c in r.failures():
            lines.append(f"    failed: {c.name}" + (f": {c.detail}" if c.detail else ""))
    lines.append(f"{len(records) - len(failed)}/{len(records)} records pass")
    _emit(cfg, data, lines, out)
    return EXIT_FAILED if failed else EXIT_OK


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "structured"), default="text",
                        help="output format; structured is an alias for json")
    common.add_argument("--precision", type=int, default=30, help="decimal digits when printing rates")
    common.add_argument("--width-exp", type=int, default=40, help="isolating intervals narrower than 2^-N")
    common.add_argument("--terms", type=int, default=200, help="number of series terms")

    p = argparse.ArgumentParser(prog="coxgrowth", description="Growth functions and growth rates of Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("growth-graph", parents=[common], help="growth of a Coxeter graph file")
    g.add_argument("path")
    g = sub.add_parser("growth-poly", parents=[common], help="full report for a polyhedron file")
    g.add_argument("path")
    g = sub.add_parser("series", parents=[common], help="growth series coefficients (.poly or Coxeter graph file)")
    g.add_argument("path")
    g = sub.add_parser("transform", parents=[common], help="pinch an edge or open a cusp")
    g.add_argument("path")
    how = g.add_mutually_exclusive_group(required=True)
    how.add_argument("--pinch", nargs=2, type=int, metavar=("U", "V"), help="edge to contract")
    how.add_argument("--open", type=int, metavar="VERTEX", help="(2,2,2,2) cusp to open")
    g.add_argument("--pairing", type=int, default=0, choices=(0, 1))
    g.add_argument("--m", type=int, default=7, help="label of the new edge")
    g.add_argument("-o", "--output", help="write the polyhedron here instead of stdout")
    g = sub.add_parser("verify-paper", parents=[common], help="run the identity suite")
    g.add_argument("--m-grid", default="7-12", help="large labels to test, e.g. 7-12 or 7,9,15")
    g.add_argument("--tamper", type=int, default=None, help=argparse.SUPPRESS)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        path = getattr(args, "path", None)
        cfg = RunConfig(args.command, [path] if path else [], args.precision, args.width_exp, args.terms, args.format)
        if args.command == "growth-graph":
            return cmd_growth_graph(cfg, out)
        if args.command == "growth-poly":
            return cmd_growth_polyhedron(cfg, out)
        if args.command == "series":
            return cmd_series(cfg, out)
        if args.command == "transform":
            return cmd_transform(cfg, args, out)
        return cmd_verify_paper(cfg, args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
