from pathlib import Path

import click

from mimo_trt.app.cli import resolve
from mimo_trt.app.cli.errors import cli_errors
from mimo_trt.app.cli.options import format_option, verbose_option
from mimo_trt.app.lifecycle import with_lifecycle
from mimo_trt.core.analysis import DEFAULT_WINDOW_DB
from mimo_trt.core.operations import AnalyzeOperation
from mimo_trt.entities.result import ResultFormat


@click.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--level",
    "levels",
    type=float,
    multiple=True,
    help="Probability level for curve spacings; repeatable.",
)
@click.option("--slope-window", type=float, default=DEFAULT_WINDOW_DB, show_default=True)
@click.option(
    "--slope-center-db",
    type=float,
    default=None,
    help="Centre of the slope window; the deepest unflagged decade when omitted.",
)
@format_option
@verbose_option
@with_lifecycle
def analyze(
    input_path: Path,
    levels: tuple[float, ...],
    slope_window: float,
    slope_center_db: float | None,
    fmt: str,
):
    """Measure slopes and spacings of a result file and compare them with predictions."""
    writer = resolve.resolve_report_writer()
    with cli_errors():
        rows = resolve.resolve_result_store().read_rows(input_path)
        report = AnalyzeOperation().execute(rows, levels, slope_window, slope_center_db)
    writer.analysis(report, as_json=ResultFormat(fmt) is ResultFormat.JSON)
