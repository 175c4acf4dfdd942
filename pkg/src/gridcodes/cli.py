"""Command-line interface.

Exit codes: 0 success/verified, 1 checked-and-failed, 2 usage or parse
error, 3 inconclusive (budget exhausted).  All reports are line oriented and
deterministic; numeric results print as exact fractions plus a fixed
6-decimal approximation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds, code, discharge, localver, pairs, torus
from .grid import GridKind

OK, FAILED, USAGE, INCONCLUSIVE = 0, 1, 2, 3


def _emit(lines):
    for line in lines:
        sys.stdout.write(line + "\n")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _frac_line(prefix: str, x: Fraction) -> str:
    return f"{prefix}{_frac(x)} ≈ {float(x):.6f}"


def _load_pattern(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise code.PatternError(0, 0, f"cannot read {path}: {e.strerror}")
    return code.parse_pattern(text)


def _cmd_verify(args) -> int:
    c, r = _load_pattern(args.pattern)
    report = code.is_identifying_code(c, r)
    lines = [
        f"grid {c.kind.value}",
        f"r {r}",
        f"period {c.px} {c.py}",
        f"valid {'yes' if report.valid else 'no'}",
    ]
    if report.violation is not None:
        coords = " ".join(f"{v[0]} {v[1]}" for v in report.violation.vertices)
        lines.append(f"violation {report.violation.kind} {coords}")
    lines.append(_frac_line("density ", code.density(c)))
    _emit(lines)
    return OK if report.valid else FAILED


def _cmd_density(args) -> int:
    c, _r = _load_pattern(args.pattern)
    _emit([_frac_line("density ", code.density(c))])
    return OK


def _cmd_pairs(args) -> int:
    c, r = _load_pattern(args.pattern)
    window = code.Window(c.kind, args.m)
    report = pairs.pair_report(c, r, window)
    _emit(pairs.report_lines(report))
    return OK


def _cmd_bound(args) -> int:
    try:
        k = Fraction(args.k)
    except (ValueError, ZeroDivisionError):
        raise code.PatternError(0, 0, f"invalid rational: {args.k}")
    value = bounds.density_lower_bound(args.b, k)
    _emit([_frac_line("", value)])
    return OK


def _cmd_lemma(args) -> int:
    cert = localver.run_statement(args.statement, args.budget)
    _emit(localver.certificate_lines(cert))
    if cert.status == "pass":
        return OK
    if cert.status == "inconclusive":
        return INCONCLUSIVE
    return FAILED


def _cmd_discharge(args) -> int:
    c, r = _load_pattern(args.pattern)
    window = code.Window(c.kind, args.m)
    graph = pairs.aux_graph(c, r, window)
    holds, lhs, rhs = discharge.check_average_bound(graph)
    lines = [
        f"codewords {len(graph.vertices)}",
        f"edges {len(graph.edges)}",
        f"sum_degrees {lhs}",
        f"seven_vertices {rhs}",
        f"holds {'yes' if holds else 'no'}",
    ]
    try:
        ledger = discharge.run_discharging(graph)
    except discharge.DischargingError as e:
        lines.append(f"discharge_failure {e.vertex[0]} {e.vertex[1]}")
        _emit(lines)
        return FAILED
    lines.extend(discharge.ledger_lines(ledger))
    _emit(lines)
    return OK if holds else FAILED


def _cmd_torus_min(args) -> int:
    kind = GridKind.SQUARE if args.grid == "square" else GridKind.HEX
    inst = torus.TorusInstance(kind, args.n, args.r)
    if args.heuristic:
        try:
            size, codeset = torus.heuristic_upper(inst, args.seed, args.iters)
        except ValueError:
            _emit(["mode heuristic", "status no-code"])
            return FAILED
        lines = [
            "mode heuristic",
            f"seed {args.seed}",
            f"iters {args.iters}",
            "status valid",
            f"size {size}",
        ]
        status = OK
    else:
        res = torus.min_code_exact(inst, args.budget)
        if res.status == "no_code":
            _emit(["mode exact", "status no-code"])
            return FAILED
        lines = [
            "mode exact",
            f"budget {args.budget}",
            f"status {'optimal' if res.status == 'optimal' else 'inconclusive'}",
            f"size {res.size}",
            f"nodes {res.nodes}",
        ]
        codeset = res.code
        status = OK if res.status == "optimal" else INCONCLUSIVE
    pattern = code.format_pattern(torus.to_periodic_code(inst, codeset), args.r)
    _emit(lines)
    sys.stdout.write(pattern)
    return status


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gridcodes",
        description="Identifying codes on the square and hexagonal grids.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a periodic pattern file")
    p.add_argument("pattern", help="pattern file path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("density", help="exact density of a pattern file")
    p.add_argument("pattern")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("pairs", help="witness and pair-count report on a window")
    p.add_argument("pattern")
    p.add_argument("--m", type=int, default=6, help="window half-width")
    p.set_defaults(func=_cmd_pairs)

    p = sub.add_parser("bound", help="density lower bound 6/(2b+4+k)")
    p.add_argument("--b", type=int, required=True, help="ball size")
    p.add_argument("--k", required=True, help="pair-count bound (rational)")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("lemma", help="machine-verify a local pair-count statement")
    p.add_argument("statement", choices=list(localver.STATEMENT_NAMES))
    p.add_argument("--budget", type=int, default=localver.DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1, help="worker cap (output-neutral)")
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("discharge", help="discharging ledger for a pattern's pair graph")
    p.add_argument("pattern")
    p.add_argument("--m", type=int, default=6, help="window half-width")
    p.set_defaults(func=_cmd_discharge)

    p = sub.add_parser("torus-min", help="minimum identifying code on an n x n torus")
    p.add_argument("--grid", choices=["square", "hex"], required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=torus.DEFAULT_NODE_BUDGET)
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=20)
    p.add_argument("--threads", type=int, default=1, help="worker cap (output-neutral)")
    p.set_defaults(func=_cmd_torus_min)

    return top


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    threads = getattr(args, "threads", 1)
    if threads is not None and threads < 1:
        sys.stderr.write("error: --threads must be at least 1\n")
        return USAGE
    try:
        return args.func(args)
    except code.PatternError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
