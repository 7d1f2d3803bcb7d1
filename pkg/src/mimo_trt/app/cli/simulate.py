import json
from pathlib import Path
from typing import Any

import click
from click.core import ParameterSource

from mimo_trt.app.cli import resolve
from mimo_trt.app.cli.errors import cli_errors
from mimo_trt.app.cli.options import (
    antenna_options,
    format_option,
    parse_float_list,
    scheme_options,
    threads_option,
    verbose_option,
)
from mimo_trt.app.config import AppConfig
from mimo_trt.app.lifecycle import with_lifecycle
from mimo_trt.core.operations import SimulateOperation
from mimo_trt.entities.result import ResultFormat
from mimo_trt.entities.sweep import SweepConfig

SWEEP_FLAGS = (
    "scheme",
    "block_length",
    "symbols_per_block",
    "max_rounds",
    "m",
    "n",
    "rates",
    "snr_start_db",
    "snr_stop_db",
    "snr_step_db",
    "max_samples",
    "target_hits",
    "ci_confidence",
    "seed",
    "delta",
)


def build_sweep_config(
    ctx: click.Context, app_config: AppConfig, config_path: Path | None, flags: dict[str, Any]
) -> SweepConfig:
    """Merge settings defaults, flag defaults, the config file and explicit flags, in that order."""
    values: dict[str, Any] = {
        "max_samples": app_config.default_max_samples,
        "target_hits": app_config.default_target_hits,
        "ci_confidence": app_config.default_confidence,
        "delta": app_config.default_delta,
    }
    explicit = {}
    for name in SWEEP_FLAGS:
        value = flags.get(name)
        if value is None:
            continue
        if ctx.get_parameter_source(name) is ParameterSource.DEFAULT:
            values[name] = value
        else:
            explicit[name] = value

    if config_path is not None:
        values.update(json.loads(config_path.read_text(encoding="utf-8")))
    values.update(explicit)
    return SweepConfig.model_validate(values)


@click.command()
@antenna_options
@scheme_options
@click.option("--rates", callback=parse_float_list, default=None, help="Comma-separated bpcu.")
@click.option("--snr-start-db", type=float, default=None)
@click.option("--snr-stop-db", type=float, default=None)
@click.option("--snr-step-db", type=float, default=None)
@click.option("--max-samples", type=int, default=None)
@click.option("--target-hits", type=int, default=None)
@click.option("--confidence", "ci_confidence", type=float, default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--delta", type=float, default=None, help="Region rule-of-thumb threshold.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="JSON sweep config; explicit flags override its values.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Result file; rows go to stdout when omitted.",
)
@format_option
@threads_option
@verbose_option
@with_lifecycle
def simulate(config_path: Path | None, out: Path | None, fmt: str, threads: int | None, **flags):
    """Estimate outage curves by Monte Carlo and write one row per (rate, SNR) point."""
    ctx = click.get_current_context()
    with cli_errors():
        sweep_config = build_sweep_config(ctx, resolve.resolve_app_config(), config_path, flags)
        operation = SimulateOperation(
            engine=resolve.resolve_engine(threads), result_store=resolve.resolve_result_store()
        )
        rows = operation.execute(sweep_config)
        text = operation.write(rows, out, ResultFormat(fmt))
    if text is not None:
        click.echo(text, nl=False)
