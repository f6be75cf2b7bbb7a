"""Command-line front end.

Exit codes: 0 on success, 2 when the input is rejected (bad flags, or data
outside the hypotheses of the result being applied), 1 on internal errors.
Reports go to stdout (or ``--out``); stderr only carries error messages.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import report as rep
from .cohomology import GenericityPolicy, GonalityStatus
from .extendability import K3Mode
from .lattice import HypothesisError

log = logging.getLogger("weierext")

EXIT_OK, EXIT_INTERNAL, EXIT_REJECTED = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--policy", choices=("exact", "generic"), default="generic",
                        help="exact: report indeterminate curve cohomology as bounds; generic: assume a general Pic^0 twist")
    common.add_argument("--out", type=Path, help="write the report to this file instead of stdout")
    return common


def _surface_args(parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        parser.add_argument(f"--{name}", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="weierext", description="Extendability checks for Weierstrass elliptic surfaces", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="invariants and Kodaira dimension of (g, n)", allow_abbrev=False)
    _surface_args(p, "g", "n")

    p = sub.add_parser("cohomology", parents=[common], help="cohomology of alpha*C + beta*f", allow_abbrev=False)
    _surface_args(p, "g", "n", "alpha", "beta")

    p = sub.add_parser("numerical", parents=[common], help="Gaussian-map criterion for a curve class D0", allow_abbrev=False)
    _surface_args(p, "g", "n", "a", "b", "alpha", "beta")
    p.add_argument("--gonality", choices=[s.value for s in GonalityStatus],
                   help="gonality of a general D in |D0| (default: derived from D0)")
    p.add_argument("--linearly-normal", action="store_true")

    p = sub.add_parser("verdict", parents=[common], help="every nonextendability rule firing for H = aC + bf", allow_abbrev=False)
    _surface_args(p, "g", "n", "a", "b")
    p.add_argument("--linearly-normal", action="store_true")

    p = sub.add_parser("enumerate-k3", parents=[common], help="K3 triples (a, b, g(S)) not excluded", allow_abbrev=False)
    p.add_argument("--mode", choices=[m.value for m in K3Mode], default=K3Mode.NORMAL.value)

    p = sub.add_parser("fibra-pairs", parents=[common], help="admissible (a, C.f) pairs", allow_abbrev=False)
    p.add_argument("--locally-factorial", action="store_true")

    sub.add_parser("line-counts", parents=[common], help="lines on Del Pezzo surfaces", allow_abbrev=False)

    p = sub.add_parser("scroll-check", parents=[common], help="vanishings on the Weierstrass scroll", allow_abbrev=False)
    _surface_args(p, "g", "n", "a", "b")

    sub.add_parser("report", parents=[common], help="markdown document with every table", allow_abbrev=False)
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    skip = {"command", "format", "policy", "out"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def run(args: argparse.Namespace) -> dict:
    policy = GenericityPolicy(args.policy)
    cmd = args.command
    if cmd == "invariants":
        return rep.invariants_report(args.g, args.n)
    if cmd == "cohomology":
        return rep.cohomology_report(args.g, args.n, args.alpha, args.beta, policy)
    if cmd == "numerical":
        gonality = GonalityStatus(args.gonality) if args.gonality else None
        return rep.numerical_report(args.g, args.n, args.a, args.b, args.alpha, args.beta, gonality, args.linearly_normal)
    if cmd == "verdict":
        return rep.verdict_report(args.g, args.n, args.a, args.b, args.linearly_normal)
    if cmd == "enumerate-k3":
        return rep.enumerate_k3_report(K3Mode(args.mode))
    if cmd == "fibra-pairs":
        return rep.fibra_pairs_report(args.locally_factorial)
    if cmd == "line-counts":
        return rep.line_counts_report()
    if cmd == "scroll-check":
        return rep.scroll_check_report(args.g, args.n, args.a, args.b, policy)
    if cmd == "report":
        return rep.full_report()
    raise AssertionError(f"unhandled command {cmd}")


def render(report: dict, fmt: str) -> str:
    if report["command"] == "report" and fmt == "table":
        return rep.render_markdown(report)
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    return rep.render_table(report)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    try:
        report = run(args)
        status = EXIT_OK
    except HypothesisError as exc:
        print(f"weierext: {exc}", file=sys.stderr)
        report = rep.rejection_report(args.command, _inputs(args), exc.hypothesis, str(exc))
        status = EXIT_REJECTED
    except ValueError as exc:
        print(f"weierext: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except Exception:  # noqa: BLE001
        log.exception("internal error")
        return EXIT_INTERNAL
    _emit(render(report, args.format), args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
