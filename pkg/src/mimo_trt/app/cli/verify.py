import click

from mimo_trt.app.cli import resolve
from mimo_trt.app.cli.errors import cli_errors
from mimo_trt.app.cli.options import format_option, threads_option, verbose_option
from mimo_trt.app.lifecycle import with_lifecycle
from mimo_trt.core.operations import VerifyOperation
from mimo_trt.core.operations.verify_operation import MC_RUNS
from mimo_trt.entities.report import VerifyOracle
from mimo_trt.entities.result import ResultFormat


@click.command()
@click.argument("oracle", type=click.Choice([oracle.value for oracle in VerifyOracle]))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--runs", type=click.IntRange(min=1), default=MC_RUNS, show_default=True)
@format_option
@threads_option
@verbose_option
@with_lifecycle
def verify(oracle: str, seed: int, runs: int, fmt: str, threads: int | None):
    """Run a self-check (identities, exponent, siso, gamma); exits with 1 on failure."""
    with cli_errors():
        report = VerifyOperation(engine=resolve.resolve_engine(threads)).execute(
            VerifyOracle(oracle), seed=seed, runs=runs
        )
    resolve.resolve_report_writer().verification(
        report, as_json=ResultFormat(fmt) is ResultFormat.JSON
    )
    if not report.passed:
        click.get_current_context().exit(1)
