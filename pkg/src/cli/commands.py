"""Command-line front end."""

import json
import logging
import os
import sys
from pathlib import Path
from typing import Dict, List

import click
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.identities.base import identity_registry
from src.identities.verifier import engine_from_config, verify_many
from src.klr.reduction import reduce
from src.klr.serialize import format_element, parse_element
from src.storage.cache_manager import SplitterCacheManager, get_cache_manager, set_cache_manager
from src.symfunc.littlewood import schur_product, skew_schur, skew_schur_determinant
from src.symfunc.partitions import Partition, parse_partition
from src.symfunc.quantum import quantum_binomial_partition, q_divided_power_product
from src.symfunc.schur import schur_bialternant
from src.thick.calibration import calibrate_engine
from src.utils.config import ENV_PREFIX, config
from src.utils.errors import ThickCalcError

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Everything one `verify` run depends on."""

    rank: int = Field(4, ge=2)
    max_strands: int = Field(6, ge=1)
    identities: List[str] = Field(default_factory=list)
    grid_overrides: Dict[str, int] = Field(default_factory=dict)
    oracle: bool = True
    workers: int = Field(1, ge=1)
    cache_path: str = "./data/cache/splitters.json"
    report_path: str = "./data/reports/report.json"
    seed: int = 0
    mutate: bool = False

    @field_validator("identities")
    @classmethod
    def known_identities(cls, names: List[str]) -> List[str]:
        if not names:
            return identity_registry.list_identities()
        unknown = [name for name in names if identity_registry.get_identity(name) is None]
        if unknown:
            raise ValueError(f"unknown identities: {', '.join(unknown)}")
        return list(dict.fromkeys(identity_registry.canonical_name(name) for name in names))

    @model_validator(mode="after")
    def grids_fit_budget(self) -> "RunConfig":
        for name in self.identities:
            spec = identity_registry.require(name)
            for params in self.grid(name):
                if spec.thin_strands(params) > self.max_strands:
                    raise ValueError(f"{name} tuple {params} needs more than {self.max_strands} thin strands")
        return self

    def grid(self, name: str) -> List[dict]:
        """The default grid of `name`, restricted by the overrides."""
        spec = identity_registry.require(name)
        return [
            params for params in spec.grid(self.max_strands, self.rank)
            if all(params.get(key, value) == value for key, value in self.grid_overrides.items())
        ]


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ThickCalcError as exc:
        raise click.BadParameter(str(exc))


def _operands(words: tuple) -> List[Partition]:
    """Partitions separated by `/` on the command line."""
    text = " ".join(words)
    pieces = [piece.strip() for piece in text.split("/")]
    return [_partition(piece) for piece in pieces]


@click.group()
@click.option("--log-level", default=config.log_level, envvar=ENV_PREFIX + "LOG_LEVEL", show_default=True)
def cli(log_level: str):
    """thickcalc: exact computations in the thick calculus of categorified quantum sl(n)."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


@cli.command()
@click.argument("operands", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the expansion as JSON.")
def lr(operands: tuple, as_json: bool):
    """Expand π_α · π_β (· …) in Schur polynomials, e.g. `lr 2,2 / 1`."""
    partitions = _operands(operands)
    if len(partitions) < 2:
        raise click.UsageError("lr needs at least two partitions separated by '/'")
    expansion = schur_product(partitions)
    if as_json:
        click.echo(json.dumps([{"gamma": list(g.parts), "coeff": c} for g, c in expansion.items()]))
    else:
        click.echo(", ".join(f"{gamma}:{coeff}" for gamma, coeff in expansion.items()))


@cli.command()
@click.argument("a", type=click.IntRange(min=0))
@click.argument("b", type=click.IntRange(min=0))
def qbinom(a: int, b: int):
    """[a+b choose a], checked against the sum over P(a,b)."""
    factorial_form = q_divided_power_product(a, b)
    partition_form = quantum_binomial_partition(a, b)
    click.echo(str(factorial_form))
    if factorial_form != partition_form:
        click.echo(f"❌ partition sum gives {partition_form}", err=True)
        sys.exit(1)


@cli.command(name="reduce")
@click.argument("text")
def reduce_command(text: str):
    """Print the canonical form of a thin element."""
    try:
        element = parse_element(text)
    except ThickCalcError as exc:
        raise click.UsageError(str(exc))
    click.echo(format_element(reduce(element)))


@cli.command()
@click.argument("alpha")
@click.option("--vars", "m", type=click.IntRange(min=1), default=None, help="Number of variables (default: length of α).")
def schur(alpha: str, m: int):
    """The Schur polynomial π_α."""
    shape = _partition(alpha)
    m = m or max(shape.length, 1)
    click.echo(str(schur_bialternant(shape, m).as_expr()))


@cli.command()
@click.argument("operands", nargs=-1, required=True)
@click.option("--vars", "m", type=click.IntRange(min=1), default=None, help="Number of variables (default: length of γ).")
def skew(operands: tuple, m: int):
    """The skew Schur polynomial π_{γ/α}, e.g. `skew 2,1 / 1`."""
    partitions = _operands(operands)
    if len(partitions) != 2:
        raise click.UsageError("skew needs exactly two partitions separated by '/'")
    gamma, alpha = partitions
    m = m or max(gamma.length, 1)
    value = skew_schur(gamma, alpha, m)
    if value != skew_schur_determinant(gamma, alpha, m):
        click.echo("❌ determinant form disagrees", err=True)
        sys.exit(1)
    click.echo(str(value.as_expr()))


@cli.command(name="list")
@click.option("--max-strands", type=click.IntRange(min=1), default=config.max_strands, show_default=True)
@click.option("--rank", type=click.IntRange(min=2), default=config.rank, show_default=True)
def list_command(max_strands: int, rank: int):
    """Registered identities and their default grid sizes."""
    for name in identity_registry.list_identities():
        spec = identity_registry.get_identity(name)
        click.echo(f"{name:24s} {len(spec.grid(max_strands, rank)):6d}  {spec.description}")


@cli.command()
@click.option("--rank", type=click.IntRange(min=2), default=config.rank, envvar=ENV_PREFIX + "RANK", show_default=True)
@click.option("--identity", "identities", multiple=True, help="Identity to verify (repeatable; default all).")
@click.option("--max-strands", type=click.IntRange(min=1), default=config.max_strands, envvar=ENV_PREFIX + "MAX_STRANDS", show_default=True)
@click.option("--grid", "grid_overrides", multiple=True, help="Restrict the grid, e.g. --grid a=1 (repeatable).")
@click.option("--oracle", type=click.Choice(["on", "off"]), default=config.oracle, envvar=ENV_PREFIX + "ORACLE", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=config.workers, envvar=ENV_PREFIX + "WORKERS", show_default=True)
@click.option("--cache", "cache_path", default=config.cache_path, envvar=ENV_PREFIX + "CACHE", show_default=True)
@click.option("--report", "report_path", default=config.report_path, envvar=ENV_PREFIX + "REPORT", show_default=True)
@click.option("--seed", type=int, default=config.seed, envvar=ENV_PREFIX + "SEED", show_default=True)
@click.option("--mutate", is_flag=True, help="Corrupt every right side (negative control).")
def verify(rank, identities, max_strands, grid_overrides, oracle, workers, cache_path, report_path, seed, mutate):
    """Verify identity grids and write a JSON report; exit 1 on any failure."""
    if not identities and config.identities:
        identities = tuple(config.identities)
    overrides: Dict[str, int] = {}
    for item in grid_overrides:
        key, sep, value = item.partition("=")
        if not sep or not value.lstrip("-").isdigit():
            raise click.BadParameter(f"expected key=integer, got {item!r}", param_hint="--grid")
        overrides[key.strip()] = int(value)

    try:
        run = RunConfig(
            rank=rank, max_strands=max_strands, identities=list(identities), grid_overrides=overrides,
            oracle=oracle == "on", workers=workers, cache_path=cache_path, report_path=report_path,
            seed=seed, mutate=mutate,
        )
    except ValidationError as exc:
        raise click.UsageError(str(exc))

    # Worker processes rebuild config from the environment.
    os.environ[ENV_PREFIX + "CACHE"] = run.cache_path
    os.environ[ENV_PREFIX + "SEED"] = str(run.seed)
    config.cache_path, config.seed = run.cache_path, run.seed
    set_cache_manager(SplitterCacheManager(run.cache_path))

    engine = calibrate_engine(engine_from_config())
    report = verify_many(
        run.identities, engine=engine, oracle=run.oracle, mutate=run.mutate, workers=run.workers,
        max_strands=run.max_strands, rank=run.rank, grids={name: run.grid(name) for name in run.identities},
    )

    path = Path(run.report_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.to_json(), encoding="utf-8")

    for identity_report in report.reports:
        marker = "✅" if identity_report.all_passed else "❌"
        summary = identity_report.summary
        click.echo(f"{marker} {identity_report.identity}: {summary.passed}/{summary.total} passed")
    click.echo(f"{report.summary.passed} pass, {report.summary.failed} fail, {report.summary.total} total; report written to {path}")
    sys.exit(0 if report.all_passed else 1)


@cli.group()
def cache():
    """Inspect or clear the splitter cache."""


@cache.command(name="info")
@click.option("--cache", "cache_path", default=config.cache_path, envvar=ENV_PREFIX + "CACHE", show_default=True)
def cache_info(cache_path: str):
    manager = SplitterCacheManager(cache_path)
    for key, value in manager.get_statistics().items():
        click.echo(f"{key}: {value}")


@cache.command(name="clear")
@click.option("--cache", "cache_path", default=config.cache_path, envvar=ENV_PREFIX + "CACHE", show_default=True)
def cache_clear(cache_path: str):
    manager = SplitterCacheManager(cache_path)
    removed = manager.clear()
    if get_cache_manager().cache_path == manager.cache_path:
        set_cache_manager(None)
    click.echo("✅ cache cleared" if removed else "⚠️  no cache file to clear")
