"""
Type-crossing growth engine: command-line entry point.

Builds R-matrices of U_q(sl_n) representations, checks their spectra and
braided radicals, and grows B_n, C_n and D_n Cartan data out of A_{n-1}.

Exit codes: 0 on success, 1 when a check fails or a construction cannot be
completed, 2 for usage errors.
"""

import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional

import click

from config import settings
from grow import GrowthError, build_tree, growth_step, sorted_edges, sorted_nodes
from nichols import SizeCapExceeded, radical_basis, render_comb, render_word
from qrep import RepFactory, RepresentationError
from rmx import CablingError, NormalizationError, build_bundle, vector_rmatrix_star
from schemas import RadicalReport, TreeEdgeModel, TreeReport
from services import SuiteRunner, emit_dot

logger = logging.getLogger(__name__)

REP_CHOICES = ["vector", "sym2", "wedge2"]
CONSTRUCTION_ERRORS = (GrowthError, CablingError, NormalizationError, SizeCapExceeded, ArithmeticError)


def configure_logging() -> None:
    """Stream handler on stderr, plus a file handler when LOG_FILE is set."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.LOG_FILE:
        handlers.append(logging.FileHandler(settings.LOG_FILE))
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL, logging.WARNING),
        format=settings.LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def validate_rep(tag: str, n: int) -> None:
    """
    Raises:
        click.BadParameter: If the family does not exist at this n
    """
    try:
        RepFactory.create(tag, n)
    except RepresentationError as e:
        raise click.BadParameter(str(e), param_hint="--n") from e


def write_or_echo(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", path)
    else:
        click.echo(text)


def fail(message: str) -> NoReturn:
    click.echo(f"Error: {message}", err=True)
    raise click.exceptions.Exit(1)


@click.group()
def cli():
    """Exact R-matrix and quantum-group growth engine."""
    configure_logging()


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Rank parameter of sl_n.")
@click.option("--rep", "tag", type=click.Choice(REP_CHOICES), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None, help="Write JSON here.")
def rmatrix(n: int, tag: str, json_path: Optional[str]):
    """R_VV, its spectrum, lambda and R'."""
    validate_rep(tag, n)
    try:
        bundle = build_bundle(tag, n)
    except CONSTRUCTION_ERRORS as e:
        fail(f"{tag} R-matrix construction failed at n={n}: {e}")
    report = bundle.to_report()
    write_or_echo(report.model_dump_json(indent=2), json_path)
    if json_path:
        eigenvalues = ", ".join(e.text for e in report.eigenvalues)
        lam = report.lam.text if report.lam else "n/a"
        click.echo(f"{tag} n={n}: eigenvalues {eigenvalues}; lambda = {lam}")
    failed = [c.name for c in report.checks if not c.passed]
    if failed:
        fail(f"{len(failed)} R-matrix checks failed for {tag} at n={n}: {'; '.join(failed)}")


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Rank of the grown algebra.")
@click.option("--rep", "tag", type=click.Choice(REP_CHOICES), required=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None, help="Write JSON here.")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None,
              help="Write the extended Dynkin diagram here.")
def grow(n: int, tag: str, json_path: Optional[str], dot_path: Optional[str]):
    """One growth step A_{n-1} => B_n / C_n / D_n."""
    validate_rep(tag, n)
    try:
        result = growth_step(tag, n)
    except CONSTRUCTION_ERRORS as e:
        fail(f"growth via {tag} failed at n={n}: {e}")
    write_or_echo(result.to_report().model_dump_json(indent=2, by_alias=True), json_path)
    if dot_path:
        Path(dot_path).write_text(emit_dot(result.cartan, result.target), encoding="utf-8")
    if not result.passed:
        failed = [c.name for c in result.checks + result.relations if not c.passed]
        fail(f"{len(failed)} growth checks failed for {tag} at n={n}: {'; '.join(failed)}")


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--degree", type=click.IntRange(min=1), required=True)
@click.option("--braiding", type=click.Choice(["star"]), default="star", show_default=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None, help="Write JSON here.")
def radical(n: int, degree: int, braiding: str, json_path: Optional[str]):
    """Left and right radicals of the degree-d pairing."""
    if n < 2:
        raise click.BadParameter(f"the star braiding needs n ≥ 2, got {n}", param_hint="--n")
    try:
        result = radical_basis(vector_rmatrix_star(n), degree)
    except CONSTRUCTION_ERRORS as e:
        fail(f"radical computation failed at n={n}, degree {degree}: {e}")
    report = RadicalReport(
        rep=braiding,
        n=n,
        degree=degree,
        side="both",
        basis_words=[render_word(w) for w in result.words],
        pairing_rank=result.pairing_rank,
        left_radical=[render_comb(v, "f") for v in result.left],
        right_radical=[render_comb(v, "e") for v in result.right],
        excess=result.excess,
        checks=list(result.verdicts),
    )
    write_or_echo(report.model_dump_json(indent=2), json_path)
    if not all(c.passed for c in result.verdicts):
        fail(f"cubic q-Serre membership failed at n={n}")


@cli.command()
@click.option("--suite", default="all", show_default=True)
@click.option("--list", "list_only", is_flag=True, help="Print suite names and exit.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None, help="Write JSON here.")
def verify(suite: str, list_only: bool, json_path: Optional[str]):
    """Run verification suites and print a pass/fail table."""
    runner = SuiteRunner()
    if list_only:
        for name in runner.available():
            click.echo(name)
        return
    if suite not in runner.available():
        raise click.BadParameter(f"unknown suite '{suite}'. Available: {', '.join(runner.available())}",
                                 param_hint="--suite")
    report = runner.run(suite)
    for result in report.results:
        status = "PASS" if result.passed else "FAIL"
        click.echo(f"{status}  {result.name}  ({result.seconds or 0:.3f}s)")
    click.echo(f"{len(report.results) - len(report.failures)}/{len(report.results)} passed in {report.seconds:.1f}s")
    if json_path:
        Path(json_path).write_text(report.model_dump_json(indent=2), encoding="utf-8")
    if not report.passed:
        first = report.failures[0]
        fail(f"{first.name}: expected {first.expected}, got {first.actual}")


@cli.command()
@click.option("--max-rank", "max_rank", type=click.IntRange(min=1), required=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None, help="Write DOT here.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None, help="Write JSON here.")
def tree(max_rank: int, dot_path: Optional[str], json_path: Optional[str]):
    """Growth tree up to a rank."""
    graph = build_tree(max_rank)
    report = TreeReport(
        max_n=max_rank,
        nodes=sorted_nodes(graph),
        edges=[TreeEdgeModel(source=s, target=t, rep=d["rep"], lam=d["lam"], status=d["status"])
               for s, t, d in sorted_edges(graph)],
    )
    if dot_path:
        Path(dot_path).write_text(emit_dot(graph), encoding="utf-8")
    write_or_echo(report.model_dump_json(indent=2), json_path)


if __name__ == "__main__":
    cli()
