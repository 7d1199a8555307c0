"""Grid verification of registered identities.

Each tuple is built, exploded, reduced and compared; thick tuples are then
cross-checked in the polynomial representation. Failures, including errors
raised while building a tuple, are recorded in the report rather than raised.
"""

import asyncio
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

# Importing the identity modules registers them.
from src.identities import digons, moves, splitters, symmetric, thin_relations  # noqa: F401
from src.identities.base import IdentitySpec, Params, Sides, identity_registry
from src.klr.element import ThinElement, permutation_element, term_sort_key
from src.klr.polyrep import oracle_equal
from src.klr.reduction import equal, reduce
from src.klr.relations import matching_perm
from src.klr.serialize import format_element
from src.storage.cache_manager import get_cache_manager
from src.symfunc.quantum import QLaurent
from src.thick.diagram import Sum, ThickDiagram, explode
from src.thick.engine import EngineConfig
from src.thick.oracle import thick_oracle_equal
from src.utils.config import config
from src.utils.errors import ThickCalcError

logger = logging.getLogger(__name__)

DIFF_LIMIT = 50


class TupleOutcome(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    params: Dict[str, Any]
    passed: bool = Field(alias="pass")
    lhs_terms: int = 0
    rhs_terms: int = 0
    degree_ok: bool = True
    oracle: Optional[bool] = None
    diff: Optional[List[str]] = None
    millis: float = 0.0


class ReportSummary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    failed: int = Field(0, alias="fail")
    total: int = 0


class VerificationReport(BaseModel):
    identity: str
    config: Dict[str, Any]
    grid: List[TupleOutcome]
    summary: ReportSummary

    @property
    def all_passed(self) -> bool:
        return self.summary.failed == 0

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True, exclude_none=True)


class RunReport(BaseModel):
    """Every identity verified by one run."""

    reports: List[VerificationReport]
    summary: ReportSummary

    @property
    def all_passed(self) -> bool:
        return self.summary.failed == 0

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True, exclude_none=True)


def _params_key(params: Params) -> str:
    return json.dumps(params, sort_keys=True)


def mutate_element(element: ThinElement) -> ThinElement:
    """Flip the sign of the first canonical term; a zero element becomes a bare permutation diagram."""
    reduced = reduce(element)
    if reduced.terms:
        terms = dict(reduced.terms)
        first = next(iter(terms))
        terms[first] = -terms[first]
        return ThinElement(reduced.bottom, terms, reduced.top, reduced=True)
    perm = matching_perm(element.bottom, element.top)
    return reduce(permutation_element(perm, element.bottom))


def mutate_scalar(value: Any) -> Any:
    if isinstance(value, bool):
        return not value
    if isinstance(value, QLaurent):
        return value + QLaurent.one()
    return value + 1


def _term_count(value: Any) -> int:
    if isinstance(value, QLaurent):
        return len(value.terms())
    try:
        return len(value)
    except TypeError:
        return 1


def _is_empty_sum(diagram: ThickDiagram) -> bool:
    return isinstance(diagram, Sum) and not diagram.terms


def term_diff(lhs: ThinElement, rhs: ThinElement) -> List[str]:
    """Canonical-form term deltas lhs − rhs, in basis order."""
    delta: Dict[Any, int] = dict(lhs.terms)
    for word, coeff in rhs.terms.items():
        delta[word] = delta.get(word, 0) - coeff
    lines = []
    for word in sorted((w for w, c in delta.items() if c), key=term_sort_key)[:DIFF_LIMIT]:
        lines.append(format_element(ThinElement(lhs.bottom, {word: delta[word]}, reduced=True)))
    return lines


def _compare_thin(
    lhs: ThinElement, rhs: ThinElement, engine: EngineConfig, oracle: bool
) -> Tuple[bool, Optional[bool], ThinElement, ThinElement]:
    lhs_reduced, rhs_reduced = reduce(lhs), reduce(rhs)
    same = equal(lhs_reduced, rhs_reduced)
    agreed = oracle_equal(lhs, rhs, engine.orientation) if oracle else None
    return same, agreed, lhs_reduced, rhs_reduced


def check_tuple(name: str, params: Params, engine: EngineConfig, oracle: bool, mutate: bool) -> TupleOutcome:
    """Build and compare both sides of one grid tuple."""
    spec = identity_registry.require(name)
    started = time.perf_counter()
    try:
        sides = spec.build(params, engine)
        outcome = _check_sides(spec, params, sides, engine, oracle, mutate)
    except ThickCalcError as exc:
        logger.debug("%s %s raised %s", name, params, exc)
        outcome = TupleOutcome(params=params, passed=False, diff=[f"{type(exc).__name__}: {exc}"])
    outcome.millis = round((time.perf_counter() - started) * 1000, 3)
    logger.debug("%s %s -> %s", name, params, "pass" if outcome.passed else "fail")
    return outcome


def _check_sides(
    spec: IdentitySpec, params: Params, sides: Sides, engine: EngineConfig, oracle: bool, mutate: bool
) -> TupleOutcome:
    problem = spec.audit(params, sides)

    if sides.kind == "scalar":
        rhs = mutate_scalar(sides.rhs) if mutate else sides.rhs
        passed = sides.lhs == rhs and problem is None
        diff = None if passed else [f"lhs: {sides.lhs}", f"rhs: {rhs}"] + ([problem] if problem else [])
        return TupleOutcome(
            params=params, passed=passed, lhs_terms=_term_count(sides.lhs), rhs_terms=_term_count(rhs), diff=diff
        )

    if sides.kind == "thin":
        lhs_thin, rhs_thin = sides.lhs, sides.rhs
        degree_ok = lhs_thin.degree is None or rhs_thin.degree is None or lhs_thin.degree == rhs_thin.degree
        if mutate:
            rhs_thin = mutate_element(rhs_thin)
        same, agreed, lhs_reduced, rhs_reduced = _compare_thin(lhs_thin, rhs_thin, engine, oracle and not mutate)
    else:
        lhs, rhs = sides.lhs, sides.rhs
        if lhs.source != rhs.source or lhs.target != rhs.target:
            return TupleOutcome(
                params=params, passed=False, degree_ok=False,
                diff=[f"boundaries differ: {lhs.source} -> {lhs.target} against {rhs.source} -> {rhs.target}"],
            )
        degree_ok = _is_empty_sum(lhs) or _is_empty_sum(rhs) or lhs.degree == rhs.degree
        lhs_reduced, rhs_reduced = explode(lhs, engine), explode(rhs, engine)
        if mutate:
            rhs_reduced = mutate_element(rhs_reduced)
        same = equal(lhs_reduced, rhs_reduced)
        agreed = thick_oracle_equal(lhs, rhs, engine) if oracle and not mutate else None

    passed = same and degree_ok and problem is None and agreed in (None, True)
    diff = None
    if not passed:
        diff = term_diff(lhs_reduced, rhs_reduced) if not same else []
        if not degree_ok:
            diff.append("degree audit failed")
        if agreed is False:
            diff.append("polynomial representation disagrees with canonical forms")
        if problem:
            diff.append(problem)
    return TupleOutcome(
        params=params,
        passed=passed,
        lhs_terms=len(lhs_reduced),
        rhs_terms=len(rhs_reduced),
        degree_ok=degree_ok,
        oracle=agreed,
        diff=diff,
    )


async def _run_pool(name: str, grid: List[Params], engine: EngineConfig, oracle: bool, mutate: bool, workers: int) -> List[TupleOutcome]:
    loop = asyncio.get_event_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [loop.run_in_executor(pool, check_tuple, name, params, engine, oracle, mutate) for params in grid]
        return list(await asyncio.gather(*tasks))


def engine_from_config() -> EngineConfig:
    return EngineConfig(**config.engine_settings())


def verify(
    spec: IdentitySpec,
    grid: Optional[List[Params]] = None,
    engine: Optional[EngineConfig] = None,
    oracle: Optional[bool] = None,
    mutate: bool = False,
    workers: Optional[int] = None,
    max_strands: Optional[int] = None,
    rank: Optional[int] = None,
) -> VerificationReport:
    """Check every tuple of `grid` (the identity's default grid if omitted)."""
    engine = engine or engine_from_config()
    oracle = config.oracle_enabled() if oracle is None else oracle
    workers = workers or config.workers
    if grid is None:
        grid = spec.grid(max_strands, rank)
    grid = [params for params in grid if spec.is_valid(params)]

    if workers > 1 and len(grid) > 1:
        outcomes = asyncio.run(_run_pool(spec.name, grid, engine, oracle, mutate, workers))
    else:
        outcomes = [check_tuple(spec.name, params, engine, oracle, mutate) for params in grid]
    outcomes.sort(key=lambda outcome: _params_key(outcome.params))

    passed = sum(1 for outcome in outcomes if outcome.passed)
    summary = ReportSummary(passed=passed, failed=len(outcomes) - passed, total=len(outcomes))
    get_cache_manager().save()

    logger.info("%s: %d pass, %d fail, %d total", spec.name, summary.passed, summary.failed, summary.total)
    return VerificationReport(
        identity=spec.name,
        config={
            **engine.model_dump(),
            "oracle": "on" if oracle else "off",
            "mutated": mutate,
            "max_strands": config.max_strands if max_strands is None else max_strands,
            "rank": config.rank if rank is None else rank,
        },
        grid=outcomes,
        summary=summary,
    )


def verify_many(names: List[str], grids: Optional[Dict[str, List[Params]]] = None, **kwargs) -> RunReport:
    """Verify several identities into one run report; `grids` overrides default grids by name."""
    grids = grids or {}
    reports = [verify(identity_registry.require(name), grid=grids.get(name), **kwargs) for name in names]
    passed = sum(report.summary.passed for report in reports)
    failed = sum(report.summary.failed for report in reports)
    return RunReport(
        reports=reports,
        summary=ReportSummary(passed=passed, failed=failed, total=passed + failed),
    )
