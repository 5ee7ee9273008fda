# Copyright 2025 Badcompany
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
dragon: count and verify tilings of dragon regions.

Exit codes: 0 every check passed, 1 a mathematical disagreement, 2 invalid
input. DRAGON_PROFILE selects the config profile; DRAGON_COUNT_SEED is
reserved and unused since every counter is deterministic.
"""

import argparse
import logging
import os
import sys
import uuid
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from src.audit import VerificationLedger
from src.cli import commands
from src.cli.reports import to_json
from src.config import PROFILE_ENV, load_settings, reload_settings
from src.errors import (
    CounterDisagreement,
    GraphFormatError,
    HypothesisViolation,
    InvalidFourPoint,
    InvalidSpec,
    MissingRegion,
    NegativeExponent,
    NonIntegerExponent,
    NonPerfectSquareDeterminant,
    NonPfaffianOrientation,
    ResidualFactor,
    UnknownVertex,
)
from src.utils.logging_config import log_dict, log_separator, setup_logging

load_dotenv()

logger = logging.getLogger(__name__)

INVALID_INPUT = (
    InvalidSpec,
    HypothesisViolation,
    NegativeExponent,
    NonIntegerExponent,
    GraphFormatError,
    InvalidFourPoint,
    UnknownVertex,
)
DISAGREEMENT = (
    CounterDisagreement,
    ResidualFactor,
    NonPerfectSquareDeterminant,
    NonPfaffianOrientation,
    MissingRegion,
)


def _triple_args(parser: argparse.ArgumentParser, with_family: bool = True) -> None:
    if with_family:
        parser.add_argument("family", type=int, choices=(1, 2), help="contour family")
    parser.add_argument("a", type=int)
    parser.add_argument("b", type=int)
    parser.add_argument("c", type=int)


def _families(text: str) -> List[int]:
    try:
        families = sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"families must look like 1,2: {exc}") from exc
    if not families or any(f not in (1, 2) for f in families):
        raise argparse.ArgumentTypeError(f"families must be drawn from 1 and 2, got {text!r}")
    return families


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dragon", description="Dragon-region tiling enumeration and verification")
    parser.add_argument("--profile", help=f"config profile (overrides {PROFILE_ENV})")
    parser.add_argument("--ledger", type=Path, help="append results to a hash-chained ledger at this path")
    parser.add_argument("--debug", action="store_true", default=None, help="DEBUG-level logging")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="count tilings of one region and compare with the closed form")
    _triple_args(p)
    p.add_argument("--counter", choices=("brute", "kasteleyn"))
    p.add_argument("--weighted", action="store_true", help="also print the tile-weighted matching polynomial")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--svg", type=Path, help="also render the region to this path")

    p = sub.add_parser("sweep", help="count every valid region up to a perimeter")
    p.add_argument("--max-perimeter", type=int)
    p.add_argument("--families", type=_families, default=None)
    p.add_argument("--jobs", type=int)
    p.add_argument("--counter", choices=("brute", "kasteleyn"))
    p.add_argument("--json", type=Path, help="write the JSON report to this path")

    p = sub.add_parser("census", help="list the base-case triples")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("identities", help="run an identity suite")
    p.add_argument("--suite", choices=commands.SUITES, required=True)
    p.add_argument("--grid", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("which", choices=("phi", "psi", "w1", "w2", "n1", "n2"))
    _triple_args(p, with_family=False)
    p.add_argument("--exponents", action="store_true", help="print exponents instead of the value")

    p = sub.add_parser("render", help="draw a region as SVG")
    _triple_args(p)
    p.add_argument("--output", type=Path, required=True)

    p = sub.add_parser("export-graph", help="write a region's dual graph in the mg text format")
    _triple_args(p)
    p.add_argument("--output", type=Path)

    p = sub.add_parser("kuo-check", help="check condensation on a graph file at four vertex indices")
    p.add_argument("graph", type=Path)
    p.add_argument("indices", type=int, nargs=4)
    p.add_argument("--counter", choices=("brute", "kasteleyn"), default="kasteleyn")
    return parser


def _open_ledger(path: Optional[Path], settings) -> Optional[VerificationLedger]:
    ledger_cfg = settings.get("ledger", {})
    if path is None and ledger_cfg.get("enabled"):
        path = Path(settings["paths"]["project_root"]) / ledger_cfg.get("path", "data/verification_ledger.jsonl")
    return VerificationLedger(path) if path is not None else None


def run(args: argparse.Namespace) -> int:
    settings = load_settings()
    log_dict(logger, "Active settings", {key: settings.get(key, {}) for key in ("profile", "counting", "ledger")})
    run_id = uuid.uuid4().hex
    ledger = _open_ledger(args.ledger, settings)

    if args.verb == "count":
        report = commands.count_region(args.family, args.a, args.b, args.c, args.counter, args.weighted, settings)
        if args.json:
            print(to_json(report))
        else:
            factors = f"2^{report.alpha} * 3^{report.beta}" if report.alpha is not None else "not 2^i * 3^j"
            print(f"count {report.count} = {factors}")
            print(f"formula {report.formula}")
            print("agrees" if report.agrees else "DISAGREES")
            if report.weighted is not None:
                print(f"weighted {report.weighted}")
        if args.svg:
            commands.render_region(args.family, args.a, args.b, args.c, args.svg, settings)
        return commands.EXIT_OK if report.agrees else commands.EXIT_DISAGREEMENT

    if args.verb == "sweep":
        sweep_cfg = settings.get("sweep", {})
        report = commands.run_sweep(
            max_perimeter=args.max_perimeter or int(sweep_cfg.get("max_perimeter", 19)),
            families=args.families or sweep_cfg.get("families", [1, 2]),
            jobs=args.jobs or int(sweep_cfg.get("jobs", 1)),
            counter=args.counter,
            settings=settings,
            ledger=ledger,
            run_id=run_id,
        )
        if args.json:
            args.json.parent.mkdir(parents=True, exist_ok=True)
            args.json.write_text(to_json(report) + "\n", encoding="utf-8")
        print(f"entries {report.summary.total} failures {report.summary.failures}")
        if report.census is not None:
            print(f"census F1 {report.census.f1} F2 {report.census.f2}")
        return commands.EXIT_OK if report.summary.failures == 0 else commands.EXIT_DISAGREEMENT

    if args.verb == "census":
        report = commands.census_report()
        print(to_json(report) if args.json else f"F1 {report.f1}\nF2 {report.f2}")
        return commands.EXIT_OK

    if args.verb == "identities":
        report = commands.run_identities(args.suite, args.grid, settings, ledger, run_id)
        if args.json:
            print(to_json(report))
        else:
            print(f"{report.suite}: {report.checked} checks, {report.failures} failures")
            if report.skipped:
                print(f"skipped {report.skipped} over the configured cap")
            if report.counterexample:
                print(f"first counterexample: {report.counterexample}")
        return commands.EXIT_OK if report.passed else commands.EXIT_DISAGREEMENT

    if args.verb == "formula":
        print(commands.formula_text(args.which, args.a, args.b, args.c, args.exponents))
        return commands.EXIT_OK

    if args.verb == "render":
        commands.render_region(args.family, args.a, args.b, args.c, args.output, settings)
        return commands.EXIT_OK

    if args.verb == "export-graph":
        text = commands.export_graph(args.family, args.a, args.b, args.c)
        if args.output:
            args.output.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return commands.EXIT_OK

    if args.verb == "kuo-check":
        try:
            text = args.graph.read_text(encoding="utf-8")
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.graph}: {exc}") from exc
        result = commands.kuo_check_text(text, args.indices, args.counter)
        print(to_json(result))
        return commands.EXIT_OK if result.holds else commands.EXIT_DISAGREEMENT

    raise ValueError(f"unknown verb {args.verb}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.profile:
        os.environ[PROFILE_ENV] = args.profile
        reload_settings()

    setup_logging(debug=args.debug)
    log_separator(logger, f"dragon {args.verb}", level="DEBUG")
    try:
        return run(args)
    except INVALID_INPUT as exc:
        logger.error(f"Invalid input: {exc}")
        return commands.EXIT_INVALID
    except DISAGREEMENT as exc:
        logger.error(f"Disagreement: {exc}")
        return commands.EXIT_DISAGREEMENT
    except ValueError as exc:
        logger.error(f"Invalid input: {exc}")
        return commands.EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
