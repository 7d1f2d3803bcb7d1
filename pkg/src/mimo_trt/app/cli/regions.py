import click

from mimo_trt.app.cli import resolve
from mimo_trt.app.cli.errors import cli_errors
from mimo_trt.app.cli.options import antenna_options, format_option, verbose_option
from mimo_trt.app.lifecycle import with_lifecycle
from mimo_trt.core.analysis import region_transitions
from mimo_trt.entities.result import ResultFormat
from mimo_trt.entities.sweep import inclusive_grid


@click.command()
@antenna_options
@click.option("--rate", type=float, required=True, help="Constant rate in bpcu.")
@click.option("--snr-start-db", type=float, default=20.0, show_default=True)
@click.option("--snr-stop-db", type=float, default=80.0, show_default=True)
@click.option("--snr-step-db", type=float, default=0.5, show_default=True)
@click.option("--delta", type=float, default=None, help="Region rule-of-thumb threshold.")
@click.option("--exact", is_flag=True, default=False, help="Use the asymptotic region map.")
@format_option
@verbose_option
@with_lifecycle
def regions(
    m: int,
    n: int,
    rate: float,
    snr_start_db: float,
    snr_stop_db: float,
    snr_step_db: float,
    delta: float | None,
    exact: bool,
    fmt: str,
):
    """Print the operating regions crossed by a constant-rate SNR trajectory."""
    config = resolve.resolve_app_config()
    with cli_errors():
        grid = inclusive_grid(snr_start_db, snr_stop_db, snr_step_db)
        changes = region_transitions(
            m,
            n,
            rate,
            grid,
            delta if delta is not None else config.default_delta,
            exact=exact,
        )
    resolve.resolve_report_writer().transitions(
        changes, as_json=ResultFormat(fmt) is ResultFormat.JSON
    )
