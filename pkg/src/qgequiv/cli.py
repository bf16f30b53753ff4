"""Command-line entry point: ``qgequiv <subcommand> [options]``.

Exit codes: 0 success, 1 usage error, 2 scenario validation failure,
3 numerical failure (non-convergence, invariant violation, or a measure pair
that disagrees beyond the tolerance).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagram import emit_diagram
from .errors import (
    ConvergenceError,
    DomainError,
    InvariantViolation,
    QGEquivError,
    ScenarioError,
    UnsupportedMeasureError,
)
from .measures import MeasureId
from .scenario import (
    DEFAULT_TOLERANCE,
    emit_fig3_curves,
    measure_values,
    parse_scenario,
    plan_flags,
    run_equivalence,
    scenario_from_dict,
    to_json_bytes,
    transform,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_NUMERICAL = 0, 1, 2, 3
FIG3_BETAS = (0.0, 0.25, 0.5, 0.75, 0.9)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _measure_list(text: str) -> list[MeasureId]:
    try:
        return [MeasureId(m.strip()) for m in text.split(",") if m.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'lo,hi', got {text!r}") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgequiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scenario_cmd(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--scenario", required=True, type=Path, help="scenario JSON file")
        p.add_argument("--beta", type=float, help="override the scenario's beta")
        p.add_argument("--out", type=Path, help="write output here instead of stdout")
        return p

    scenario_cmd("transform", "coordinates of every event in QG and S representations")
    p = scenario_cmd("measure", "evaluate measures on the scenario")
    p.add_argument("--measures", type=_measure_list, help="comma-separated measure names")
    p = scenario_cmd("equivalence", "QG-side vs S-side measure report")
    p.add_argument("--measures", type=_measure_list, help="comma-separated measure names")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    scenario_cmd("flags", "coordinator lightlines in both representations")
    scenario_cmd("diagram", "SVG Minkowski diagram")

    p = sub.add_parser("fig3", help="CSV of dx = eta dx' for several beta values")
    p.add_argument("--beta", type=float, action="append", help="repeatable; default 0,0.25,0.5,0.75,0.9")
    p.add_argument("--range", type=_range, default=(0.0, 10.0), help="dx' range as lo,hi")
    p.add_argument("--samples", type=int, default=11)
    p.add_argument("--out", type=Path)
    return parser


def _load(args):
    try:
        raw = args.scenario.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read scenario: {exc}") from None
    if args.beta is None:
        return parse_scenario(raw)
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ScenarioError([f"malformed scenario: {exc}"]) from None
    if isinstance(doc, dict):
        doc.pop("theta", None)
        doc["beta"] = args.beta
    return scenario_from_dict(doc)


def _write(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        out.write_bytes(data)


def run(args) -> int:
    cmd = args.command
    if cmd == "fig3":
        _write(emit_fig3_curves(args.beta or FIG3_BETAS, args.range, args.samples), args.out)
        return EXIT_OK
    sc = _load(args)
    if cmd == "transform":
        _write(to_json_bytes(transform(sc)), args.out)
    elif cmd == "measure":
        _write(to_json_bytes(measure_values(sc, args.measures)), args.out)
    elif cmd == "flags":
        _write(to_json_bytes(plan_flags(sc).to_dict()), args.out)
    elif cmd == "diagram":
        _write(emit_diagram(sc), args.out)
    elif cmd == "equivalence":
        report = run_equivalence(sc, args.tolerance, args.measures)
        _write(to_json_bytes(report.to_dict()), args.out)
        if not report.all_equal:
            print("error: some measure pairs differ beyond the tolerance", file=sys.stderr)
            return EXIT_NUMERICAL
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScenarioError as exc:
        print("error: scenario validation failed:", file=sys.stderr)
        for v in exc.violations:
            print(f"  - {v}", file=sys.stderr)
        return EXIT_INVALID
    except (ConvergenceError, InvariantViolation) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, UnsupportedMeasureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except QGEquivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
