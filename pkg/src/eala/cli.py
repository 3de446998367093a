"""``verify``: run the verification suites and emit a certificate."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import counterexample as cx
from .errors import ConfigError, ReportWriteError
from .report import emit_report
from .suites import SUITES, SuiteConfig, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Exact verification of the sl2 quaternion-torus EALA and the element S.",
    )
    parser.add_argument("suites", nargs="*", metavar="suite", help=f"one or more of: {', '.join(SUITES)}, all")
    parser.add_argument("--box", type=int, default=3, help="degree box [-N, N]^2 for exhaustive checks")
    parser.add_argument("--samples", type=int, default=1000, help="random samples per property check")
    parser.add_argument("--seed", type=int, default=0, help="seed for the sampler")
    parser.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--timing",
        action="store_true",
        help="record wall-clock durations (reports are no longer byte-reproducible)",
    )
    parser.add_argument(
        "--regenerate-section-fixture",
        action="store_true",
        help="re-solve the section of m and overwrite the pinned fixture",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.regenerate_section_fixture:
        sec, box = cx.find_section(0)
        path = cx.write_section_fixture(sec, box)
        print(f"wrote section fixture (box {box}) to {path}", file=sys.stderr)
        if not args.suites:
            return 0
    if not args.suites:
        parser.error("no suite given")

    config = SuiteConfig(
        box=args.box,
        samples=args.samples,
        seed=args.seed,
        output_path=args.report,
        format=args.format,
        timing=args.timing,
    )
    try:
        reports = run_suite(config, args.suites)
    except ConfigError as exc:
        print(f"verify: configuration error: {exc}", file=sys.stderr)
        return 2
    try:
        emit_report(reports, config.format, config.output_path)
    except ReportWriteError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 3
    return 1 if any(r.failed for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
