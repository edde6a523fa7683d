"""Command-line front end.

Subcommands: ``table`` (section/ideal/full cohomology tables), ``link``
(residual degree and genus across a complete intersection), ``resolve``
(synthesize and check E-type/N-type resolutions), ``verify`` (run the
reference-check suite).

Exit codes: 0 success, 1 usage error, 2 mathematical infeasibility,
3 internal inconsistency.  Output is byte-deterministic for fixed
arguments.  The environment variable QL_WINDOW (``lo:hi``) sets the
default twist window; a scenario file sets per-run defaults; flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .ambient import QUADRIC3, Ambient, parse_ambient
from .classify import etype_candidates
from .curves import (
    DEFAULT_WINDOW,
    CohomTable,
    CurveClass,
    Window,
    ambient_table,
    full_ideal_table,
    ideal_h0_table,
    parse_window,
    render_value_csv,
    render_value_row,
    section_table,
)
from .errors import InconsistencyError, InfeasibleError, RangeTooLarge
from .liaison import (
    CILinkage,
    ResolutionFlavor,
    ResolutionTriple,
    ci_residual,
    mapping_cone_n_from_e,
    resolution_consistency_check,
)
from .verify import all_ok, run_reference_checks

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_INCONSISTENT = 3


class _Parser(argparse.ArgumentParser):
    """argparse reserves status 2 for usage errors; this CLI uses 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def load_scenario(path: str) -> dict[str, str]:
    """Flat key=value lines; blank lines and # comments ignored."""
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"scenario line is not key=value: {raw.strip()!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


class _Run:
    """One command invocation: CLI flags backed by scenario-file defaults."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.scenario = load_scenario(args.scenario) if args.scenario else {}

    def get(self, key: str, default: str | None = None) -> str | None:
        flag = getattr(self.args, key, None)
        if flag is not None:
            return flag if isinstance(flag, str) else str(flag)
        return self.scenario.get(key, default)

    def require(self, key: str) -> str:
        value = self.get(key)
        if value is None:
            raise ValueError(f"missing required option: {key}")
        return value

    def int_of(self, key: str) -> int:
        value = self.require(key)
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"{key} must be an integer, got {value!r}") from None

    def window(self) -> Window:
        for source in (self.args.window, self.scenario.get("window")):
            if source:
                return parse_window(source)
        env = os.environ.get("QL_WINDOW")
        if env:
            return parse_window(env)
        return DEFAULT_WINDOW

    def format(self) -> str:
        value = self.get("format", "text")
        if value not in ("text", "csv", "json"):
            raise ValueError(f"unknown format {value!r}")
        return value

    def ambient(self) -> Ambient:
        return parse_ambient(self.require("ambient"))

    def curve(self) -> CurveClass:
        return CurveClass(
            self.ambient(), self.int_of("degree"), self.int_of("genus"), acm=True
        )

    def int_list(self, key: str) -> tuple[int, ...]:
        text = self.require(key)
        try:
            return tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(
                f"{key} must be comma-separated integers, got {text!r}"
            ) from None


def _pairs(values: dict[int, int]) -> list[list[int]]:
    return [[n, values[n]] for n in sorted(values)]


def _curve_json(curve: CurveClass) -> dict:
    return {
        "ambient": curve.ambient.label(),
        "degree": curve.degree,
        "genus": curve.genus,
    }


def _emit_row(run: _Run, row: str, values: dict[int, int], curve: CurveClass | None) -> None:
    fmt = run.format()
    if fmt == "text":
        print(render_value_row(values), end="")
    elif fmt == "csv":
        print(render_value_csv(values), end="")
    else:
        lo, hi = run.window()
        payload = {"row": row, "window": [lo, hi], "values": _pairs(values)}
        if curve is not None:
            payload["curve"] = _curve_json(curve)
        print(json.dumps(payload))


def _emit_full(run: _Run, table: CohomTable, curve: CurveClass) -> None:
    fmt = run.format()
    if fmt == "text":
        print(table.render_grid(), end="")
    elif fmt == "csv":
        print(table.render_csv(), end="")
    else:
        lo, hi = table.window
        rows = {
            f"h{i}": [[n, table.cell(i, n)] for n in range(lo, hi + 1)]
            for i in (3, 2, 1, 0)
        }
        payload = {
            "row": "full",
            "window": [lo, hi],
            "rows": rows,
            "curve": _curve_json(curve),
            "notes": list(table.notes),
        }
        print(json.dumps(payload))


def cmd_table(args: argparse.Namespace) -> int:
    run = _Run(args)
    window = run.window()
    rows = run.get("rows", "full")
    if rows == "ambient":
        _emit_row(run, "ambient", ambient_table(run.ambient(), window), None)
        return EXIT_OK
    curve = run.curve()
    if rows == "section":
        _emit_row(run, "section", section_table(curve, window), curve)
    elif rows == "ideal":
        _emit_row(run, "ideal", ideal_h0_table(curve, window), curve)
    elif rows == "full":
        _emit_full(run, full_ideal_table(curve, window), curve)
    else:
        raise ValueError(f"unknown rows selection {rows!r}")
    return EXIT_OK


def cmd_link(args: argparse.Namespace) -> int:
    run = _Run(args)
    degrees = run.int_list("ci")
    linkage = CILinkage(len(degrees) + 1, degrees)
    d2, g2 = ci_residual(run.int_of("degree"), run.int_of("genus"), linkage)
    fmt = run.format()
    if fmt == "text":
        print(f"{d2} {g2}")
    elif fmt == "csv":
        print(f"degree,genus\n{d2},{g2}")
    else:
        print(json.dumps({"degree": d2, "genus": g2}))
    return EXIT_OK


def _unique_etype(run: _Run, curve: CurveClass, window: Window) -> ResolutionTriple:
    middle, matches = etype_candidates(curve, match_window=window)
    if len(matches) != 1:
        print(
            f"kernel match for {curve.label()} is not unique: "
            f"{len(matches)} candidates",
            file=sys.stderr,
        )
        for match in matches:
            print(f"  {match.render()}", file=sys.stderr)
        raise InconsistencyError("ambiguous kernel classification")
    return ResolutionTriple(matches[0], middle, curve, ResolutionFlavor.E_TYPE)


def cmd_resolve(args: argparse.Namespace) -> int:
    run = _Run(args)
    window = run.window()
    curve = run.curve()
    if not curve.ambient.is_quadric:
        raise ValueError("resolutions are classified on the quadric threefold only")
    flavor = "etype" if args.etype else "ntype" if args.ntype else run.get("flavor")
    if flavor == "etype":
        triple = _unique_etype(run, curve, window)
    elif flavor == "ntype":
        if run.get("via") is None:
            raise ValueError("--via A,B (divisor twists) is required for N-type")
        twists = run.int_list("via")
        if len(twists) != 2:
            raise ValueError("--via needs exactly two divisor twists")
        a, b = twists
        d2, g2 = ci_residual(curve.degree, curve.genus, CILinkage(4, (2, a, b)))
        residual = CurveClass(QUADRIC3, d2, g2, acm=True)
        etype = _unique_etype(run, residual, window)
        triple = mapping_cone_n_from_e(etype, (a, b), window)
    else:
        raise ValueError("choose a flavor: --etype or --ntype")
    report = resolution_consistency_check(triple, window)
    fmt = run.format()
    if fmt == "text":
        print(triple.render())
        print(report.render_text())
    elif fmt == "csv":
        print(report.render_csv(), end="")
    else:
        lo, hi = window
        print(
            json.dumps(
                {
                    "flavor": triple.flavor.value,
                    "resolution": triple.render(),
                    "kernel": triple.kernel.render(),
                    "middle": triple.middle.render(),
                    "curve": _curve_json(triple.curve),
                    "consistency": {
                        "ok": report.ok,
                        "window": [lo, hi],
                        "rank_diff": triple.rank_diff,
                        "c1_diff": triple.c1_diff,
                        "cells": [[c.twist, c.lhs, c.rhs, c.ok] for c in report.cells],
                    },
                }
            )
        )
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def cmd_verify(args: argparse.Namespace) -> int:
    run = _Run(args)
    results = run_reference_checks()
    fmt = run.format()
    if fmt == "text":
        for r in results:
            print(f"{r.status:<21}  {r.name}: {r.detail}")
        counts = {"PASS": 0, "FAIL": 0, "EXPECTED-DISCREPANCY": 0}
        for r in results:
            counts[r.status] += 1
        print(
            f"{len(results)} checks: {counts['PASS']} pass, "
            f"{counts['EXPECTED-DISCREPANCY']} expected-discrepancy, "
            f"{counts['FAIL']} fail"
        )
    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["name", "status", "detail"])
        for r in results:
            writer.writerow([r.name, r.status, r.detail])
        print(buffer.getvalue(), end="")
    else:
        print(
            json.dumps(
                [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]
            )
        )
    return EXIT_OK if all_ok(results) else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "csv", "json"), default=None,
        help="output format (default text)",
    )
    common.add_argument(
        "--window", default=None, metavar="LO:HI",
        help="inclusive twist window (default -1:8, or QL_WINDOW); "
        "write --window=-1:4 when LO is negative",
    )
    common.add_argument(
        "--scenario", default=None, metavar="FILE",
        help="key=value defaults; flags override",
    )

    parser = _Parser(
        prog="ql",
        description=(
            "Exact cohomology tables, liaison arithmetic, and resolution "
            "checks for ACM curves on the quadric threefold and in "
            "projective space."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    table = sub.add_parser(
        "table", parents=[common], help="print cohomology tables for a curve class"
    )
    table.add_argument("--ambient", default=None, help="p2, p3, p4, ... or quadric3")
    table.add_argument("-d", "--degree", type=int, default=None)
    table.add_argument("-g", "--genus", type=int, default=None)
    table.add_argument(
        "--rows", choices=("full", "ideal", "section", "ambient"), default=None,
        help="which table to print (default full)",
    )
    table.set_defaults(func=cmd_table)

    link = sub.add_parser(
        "link", parents=[common], help="residual degree and genus across a linkage"
    )
    link.add_argument("-d", "--degree", type=int, default=None)
    link.add_argument("-g", "--genus", type=int, default=None)
    link.add_argument(
        "--ci", default=None, metavar="D1,D2,...",
        help="hypersurface degrees of the complete intersection",
    )
    link.set_defaults(func=cmd_link)

    resolve = sub.add_parser(
        "resolve", parents=[common], help="synthesize and check a resolution"
    )
    resolve.add_argument("--ambient", default=None, help="must be quadric3")
    resolve.add_argument("-d", "--degree", type=int, default=None)
    resolve.add_argument("-g", "--genus", type=int, default=None)
    flavor = resolve.add_mutually_exclusive_group()
    flavor.add_argument("--etype", action="store_true", help="E-type resolution")
    flavor.add_argument("--ntype", action="store_true", help="N-type via a linkage")
    resolve.add_argument(
        "--via", default=None, metavar="A,B",
        help="divisor twists of the linking intersection (N-type)",
    )
    resolve.set_defaults(func=cmd_resolve)

    verify = sub.add_parser(
        "verify", parents=[common], help="run the reference-check suite"
    )
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    except RangeTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InconsistencyError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def app() -> None:
    raise SystemExit(main())
