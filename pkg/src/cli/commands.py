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

"""Command implementations behind the `dragon` CLI verbs."""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.audit import VerificationLedger
from src.condensation import FourPoint, LemmaId, enumerate_four_points, kuo_check, lemma_identity, lemma_triples
from src.config import load_settings
from src.contour import (
    ContourSpec,
    Family,
    base_case_census,
    derive_sides,
    flip_horizontal,
    flip_over_b,
    perimeter,
    require_valid,
    valid_triples,
)
from src.counting import CounterKind, WeightPoly, count, count_brute, count_weighted, factorize23
from src.dualgraph import (
    DualGraph,
    cycle_graph,
    dual_of,
    edge_key,
    grid_graph,
    is_isomorphic,
    read_graph_text,
    tile_weighting,
    trace_faces,
    write_graph_text,
)
from src.errors import (
    CounterDisagreement,
    HypothesisViolation,
    InvalidFourPoint,
    InvalidSpec,
    NegativeExponent,
    ResidualFactor,
)
from src.formulas import (
    FormulaId,
    RecurrenceId,
    evaluate_formula,
    family_formula,
    flip_identity_one,
    flip_identity_two,
    formula_exponents,
    needle_formula,
    phi,
    psi,
    recurrence_counterexamples,
    recurrence_pairs,
    weighted_formula,
)
from src.region import RenderStyle, build_region, render_svg
from src.utils.logging_config import log_event

from .reports import CensusReport, CountReport, IdentityResult, SuiteReport, SweepEntry, SweepReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INVALID = 2

SUITES = ("recurrences", "flips", "weighted", "kuo", "lemmas")


def _valid_spec(family: int, a: int, b: int, c: int) -> ContourSpec:
    spec = derive_sides(Family.parse(family), a, b, c)
    require_valid(spec)
    return spec


def _factor(value: int) -> Tuple[Optional[int], Optional[int]]:
    try:
        return factorize23(value)
    except (ResidualFactor, ValueError) as exc:
        logger.warning(f"{value} is not a product of powers of 2 and 3: {exc}")
        return None, None


def count_region(
    family: int,
    a: int,
    b: int,
    c: int,
    counter: Optional[str] = None,
    weighted: bool = False,
    settings: Optional[Dict[str, Any]] = None,
) -> CountReport:
    spec = _valid_spec(family, a, b, c)
    graph = dual_of(build_region(spec))
    result = count(graph, counter=counter, settings=settings)
    formula = family_formula(spec.family, a, b, c)
    alpha, beta = _factor(result.value)
    report = CountReport(
        family=int(spec.family),
        a=a,
        b=b,
        c=c,
        perimeter=perimeter(spec),
        vertices=result.vertices,
        counter=result.counter.value,
        cross_checked=result.cross_checked,
        count=str(result.value),
        formula=str(formula),
        alpha=alpha,
        beta=beta,
        agrees=result.value == formula,
    )
    if weighted:
        report.weighted = count_weighted(tile_weighting(graph)).format()
    logger.info(f"{spec}: count={result.value} formula={formula} agrees={report.agrees}")
    return report


def sweep_entry(family: int, a: int, b: int, c: int, counter: str, cross_check_max_vertices: int) -> SweepEntry:
    """One sweep row; module-level so worker processes can run it."""
    spec = _valid_spec(family, a, b, c)
    graph = dual_of(build_region(spec))
    formula = family_formula(spec.family, a, b, c)
    try:
        value = count(graph, counter=counter, cross_check_max_vertices=cross_check_max_vertices).value
    except CounterDisagreement as exc:
        logger.error(f"{spec}: {exc}")
        return SweepEntry(family=family, a=a, b=b, c=c, perimeter=perimeter(spec), count=str(exc.primary),
                          formula=str(formula), agrees=False)
    alpha, beta = _factor(value)
    return SweepEntry(
        family=family,
        a=a,
        b=b,
        c=c,
        perimeter=perimeter(spec),
        count=str(value),
        formula=str(formula),
        alpha=alpha,
        beta=beta,
        agrees=value == formula and alpha is not None,
    )


def census_report() -> CensusReport:
    census = base_case_census()
    return CensusReport(
        f1=census.count(Family.F1),
        f2=census.count(Family.F2),
        f1_triples=[list(s.triple) for s in census.triples[Family.F1]],
        f2_triples=[list(s.triple) for s in census.triples[Family.F2]],
    )


def run_sweep(
    max_perimeter: int,
    families: Sequence[int] = (1, 2),
    jobs: int = 1,
    counter: Optional[str] = None,
    settings: Optional[Dict[str, Any]] = None,
    ledger: Optional[VerificationLedger] = None,
    run_id: str = "",
) -> SweepReport:
    if max_perimeter < 7 or max_perimeter % 2 == 0:
        raise ValueError(f"max perimeter must be odd and at least 7, got {max_perimeter}")
    settings = settings or load_settings()
    counting_cfg = settings.get("counting", {})
    counter = counter or counting_cfg.get("counter", CounterKind.KASTELEYN.value)
    cross_check = int(counting_cfg.get("cross_check_max_vertices", 40))

    tasks = [
        (int(spec.family), spec.a, spec.b, spec.c, counter, cross_check)
        for family in families
        for spec in valid_triples(Family.parse(family), max_perimeter)
    ]
    logger.info(f"Sweep: {len(tasks)} triples up to perimeter {max_perimeter} with {jobs} job(s)")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(sweep_entry, *zip(*tasks))) if tasks else []
    else:
        entries = [sweep_entry(*task) for task in tasks]

    entries.sort(key=lambda e: (e.perimeter, e.family, e.a, e.b, e.c))
    report = SweepReport(max_perimeter=max_perimeter, entries=entries, census=census_report())
    report.summary.total = len(entries)
    report.summary.failures = sum(1 for e in entries if not e.agrees)

    for entry in entries:
        log_event("sweep entry", entry.model_dump())
        if ledger is not None:
            ledger.record(run_id, "sweep", {"family": entry.family, "triple": [entry.a, entry.b, entry.c]},
                          {"count": entry.count, "agrees": entry.agrees})
    logger.info(f"Sweep finished: {report.summary.total} entries, {report.summary.failures} failures")
    return report


class _SuiteTally:
    def __init__(self, suite: str):
        self.report = SuiteReport(suite=suite)

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.report.checked += 1
        if not ok:
            self.report.failures += 1
            if self.report.counterexample is None:
                self.report.counterexample = describe()
                logger.error(f"{self.report.suite}: counterexample {self.report.counterexample}")


def _recurrence_suite(grid: int) -> SuiteReport:
    tally = _SuiteTally("recurrences")
    failures = recurrence_counterexamples(grid)
    combos = sum(len(recurrence_pairs(r)) for r in RecurrenceId)
    tally.report.checked = combos * (2 * grid + 1) ** 3
    for check in failures:
        tally.report.failures += 1
        if tally.report.counterexample is None:
            tally.report.counterexample = (
                f"{check.recurrence.value}/{check.pair.value} at {check.triple}: "
                f"{check.lhs} != {check.first} + {check.second}"
            )
    return tally.report


def _flip_suite(grid: int, max_perimeter: int, settings: Dict[str, Any]) -> SuiteReport:
    tally = _SuiteTally("flips")
    span = range(-grid, grid + 1)
    for a in span:
        for b in span:
            for c in span:
                if 2 * b - 2 * a - c + 1 >= 0:
                    tally.check(flip_identity_one(a, b, c), lambda: f"flip one at ({a},{b},{c})")
                if 2 * a - 2 * b + c - 1 >= 0:
                    tally.check(flip_identity_two(a, b, c), lambda: f"flip two at ({a},{b},{c})")

    for family in Family:
        for spec in valid_triples(family, max_perimeter):
            flip = flip_over_b if spec.f_signed >= 0 else flip_horizontal
            try:
                image = flip(spec)
            except InvalidSpec as exc:
                tally.check(False, lambda: f"flip of {spec} is not a region: {exc}")
                continue
            source, target = dual_of(build_region(spec)), dual_of(build_region(image))
            original = count(source, settings=settings).value
            flipped = count(target, settings=settings).value
            tally.check(original == flipped, lambda: f"{spec} has {original} tilings, its flip {image} has {flipped}")
            tally.check(is_isomorphic(source, target), lambda: f"{spec} and its flip {image} have different dual graphs")
    return tally.report


def _alternating_weights(g: DualGraph) -> DualGraph:
    return g.with_weights({edge_key(u, v): i % 2 for i, (u, v) in enumerate(g.edges())})


def _needle_checks(tally: _SuiteTally, grid: int) -> None:
    """Needle values factor over 2 and 3, and N2/N1 is the stated power of 3."""
    for a in range(grid + 1):
        for b in range(grid + 1):
            for c in range(grid + 1):
                try:
                    first = needle_formula(FormulaId.N1, a, b, c)
                    second = needle_formula(FormulaId.N2, a, b, c)
                except (HypothesisViolation, NegativeExponent):
                    continue
                tally.check(_factor(first)[0] is not None and _factor(second)[0] is not None,
                            lambda: f"needle value at ({a},{b},{c}) is not 2^i * 3^j")
                ratio = Fraction(second, first)
                tally.check(ratio == Fraction(3) ** ((b - a) + min(2 * a - 2 * b + c, 0)),
                            lambda: f"n2/n1 at ({a},{b},{c}) is {ratio}")


def _weighted_suite(grid: int, settings: Dict[str, Any]) -> SuiteReport:
    tally = _SuiteTally("weighted")
    for a in range(grid + 1):
        for b in range(grid + 1):
            for c in range(grid + 1):
                for which, closed_form in ((FormulaId.W1, phi), (FormulaId.W2, psi)):
                    try:
                        poly = weighted_formula(which, a, b, c)
                    except (HypothesisViolation, NegativeExponent):
                        continue
                    tally.check(poly.evaluate(1) == closed_form(a, b, c),
                                lambda: f"{which.value}({a},{b},{c}) at x=1 is {poly.evaluate(1)}")

    _needle_checks(tally, int(settings.get("identities", {}).get("needle_grid", 10)))

    kuo_cfg = settings.get("kuo", {})
    graphs = [cycle_graph(n) for n in kuo_cfg.get("cycles", [4, 6])]
    graphs += [grid_graph(r, c) for r, c in kuo_cfg.get("grids", [[2, 3]])]
    graphs = [_alternating_weights(g) for g in graphs]
    for family in Family:
        for spec in valid_triples(family, int(kuo_cfg.get("max_perimeter", 9))):
            graphs.append(tile_weighting(dual_of(build_region(spec))))
    for g in graphs:
        value = count_weighted(g).evaluate(1)
        expected = count_brute(g)
        tally.check(value == expected, lambda: f"weighted count at x=1 is {value}, brute force gives {expected}")
    return tally.report


def kuo_corpus(settings: Dict[str, Any]) -> List[Tuple[str, DualGraph]]:
    kuo_cfg = settings.get("kuo", {})
    corpus = [(f"C{n}", cycle_graph(n)) for n in kuo_cfg.get("cycles", [4, 6, 8])]
    corpus += [(f"grid {r}x{c}", grid_graph(r, c)) for r, c in kuo_cfg.get("grids", [[2, 3]])]
    for family in Family:
        for spec in valid_triples(family, int(kuo_cfg.get("max_perimeter", 15))):
            corpus.append((str(spec), dual_of(build_region(spec))))
    return corpus


def _kuo_suite(settings: Dict[str, Any]) -> SuiteReport:
    tally = _SuiteTally("kuo")
    cap = settings.get("kuo", {}).get("max_four_points_per_face")
    limit = int(cap) if cap is not None else None
    for name, g in kuo_corpus(settings):
        for face in trace_faces(g):
            four_points = enumerate_four_points(g, face)
            if limit is not None and len(four_points) > limit:
                tally.report.skipped += len(four_points) - limit
                four_points = four_points[:limit]
            for fp in four_points:
                report = kuo_check(g, fp, CounterKind.KASTELEYN)
                tally.check(report.holds, lambda: f"{name} at {fp}: {report.lhs} != {report.rhs_first} + {report.rhs_second}")
                oracle = kuo_check(g, fp, CounterKind.BRUTE)
                tally.check(oracle == report, lambda: f"{name} at {fp}: counters disagree")
        logger.debug(f"Kuo corpus {name}: {tally.report.checked} checks so far")
    if tally.report.skipped:
        logger.warning(f"Kuo suite skipped {tally.report.skipped} four-points over the per-face cap of {limit}")
    return tally.report


def _lemma_suite(settings: Dict[str, Any]) -> SuiteReport:
    tally = _SuiteTally("lemmas")
    identities_cfg = settings.get("identities", {})
    limit = int(identities_cfg.get("lemma_triples", 20))
    max_perimeter = int(identities_cfg.get("lemma_max_perimeter", 60))
    for which in LemmaId:
        for a, b, c in lemma_triples(which, limit, max_perimeter):
            report = lemma_identity(which, a, b, c, settings=settings)
            tally.check(report.holds, lambda: f"{which.value}({a},{b},{c}) over {', '.join(report.operands)}")
    return tally.report


def run_identities(
    suite: str,
    grid: Optional[int] = None,
    settings: Optional[Dict[str, Any]] = None,
    ledger: Optional[VerificationLedger] = None,
    run_id: str = "",
) -> SuiteReport:
    settings = settings or load_settings()
    identities_cfg = settings.get("identities", {})
    if suite == "recurrences":
        report = _recurrence_suite(grid if grid is not None else int(identities_cfg.get("grid", 10)))
    elif suite == "flips":
        flip_grid = grid if grid is not None else int(identities_cfg.get("flip_grid", 12))
        report = _flip_suite(flip_grid, int(settings.get("kuo", {}).get("max_perimeter", 15)), settings)
    elif suite == "weighted":
        report = _weighted_suite(grid if grid is not None else int(identities_cfg.get("weighted_grid", 12)), settings)
    elif suite == "kuo":
        report = _kuo_suite(settings)
    elif suite == "lemmas":
        report = _lemma_suite(settings)
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")

    log_event("identity suite", report.model_dump())
    if ledger is not None:
        ledger.record(run_id, "identities", {"suite": suite, "grid": grid},
                      {"checked": report.checked, "failures": report.failures})
    logger.info(f"Suite {suite}: {report.checked} checks, {report.failures} failures")
    return report


def formula_text(which: str, a: int, b: int, c: int, exponents: bool = False) -> str:
    if exponents:
        return " ".join(str(e) for e in formula_exponents(which, a, b, c))
    value = evaluate_formula(which, a, b, c)
    return value.format() if isinstance(value, WeightPoly) else str(value)


def render_region(family: int, a: int, b: int, c: int, path: Path, settings: Optional[Dict[str, Any]] = None) -> Path:
    spec = _valid_spec(family, a, b, c)
    svg = render_svg(build_region(spec), RenderStyle.from_settings(settings))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(svg, encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def export_graph(family: int, a: int, b: int, c: int) -> str:
    return write_graph_text(dual_of(build_region(_valid_spec(family, a, b, c))))


def kuo_check_text(text: str, indices: Iterable[int], counter: str = CounterKind.KASTELEYN.value) -> IdentityResult:
    graph = read_graph_text(text)
    indices = list(indices)
    if len(indices) != 4 or any(not 0 <= i < len(graph) for i in indices):
        raise InvalidFourPoint(f"need four vertex indices below {len(graph)}, got {indices}")
    vertices = [graph.vertices[i] for i in indices]
    return IdentityResult.from_report(kuo_check(graph, FourPoint(*vertices), counter))
