import click

from mimo_trt.app.cli import resolve
from mimo_trt.app.cli.errors import cli_errors
from mimo_trt.app.cli.options import (
    antenna_options,
    format_option,
    parse_float_list,
    scheme_from_options,
    scheme_options,
    verbose_option,
)
from mimo_trt.app.lifecycle import with_lifecycle
from mimo_trt.core.operations import PredictOperation
from mimo_trt.entities.result import ResultFormat


@click.command()
@antenna_options
@scheme_options
@click.option("--k", "k", type=int, default=None, help="Region index; all regions when omitted.")
@click.option(
    "--delta-r",
    callback=parse_float_list,
    default=None,
    help="Comma-separated rate differences for the spacing table.",
)
@click.option("--rate", type=float, default=None, help="Rate in bpcu of a point to classify.")
@click.option("--snr-db", type=float, default=None, help="SNR in dB of a point to classify.")
@click.option("--delta", type=float, default=None, help="Region rule-of-thumb threshold.")
@format_option
@verbose_option
@with_lifecycle
def predict(
    m: int,
    n: int,
    scheme: str,
    block_length: int,
    symbols_per_block: int,
    max_rounds: int,
    k: int | None,
    delta_r: list[float] | None,
    rate: float | None,
    snr_db: float | None,
    delta: float | None,
    fmt: str,
):
    """Print TRT coefficients, regions, predicted slopes and spacings."""
    config = resolve.resolve_app_config()
    writer = resolve.resolve_report_writer()
    with cli_errors():
        report = PredictOperation().execute(
            scheme_from_options(scheme, block_length, symbols_per_block, max_rounds),
            m,
            n,
            k=k,
            delta_rs=tuple(delta_r or ()),
            rate=rate,
            snr_db=snr_db,
            delta=delta if delta is not None else config.default_delta,
        )
    writer.prediction(report, as_json=ResultFormat(fmt) is ResultFormat.JSON)
