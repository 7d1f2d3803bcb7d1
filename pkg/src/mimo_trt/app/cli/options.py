"""Flags shared by several commands."""

import click

from mimo_trt.entities.channel import MAX_ANTENNAS
from mimo_trt.entities.result import ResultFormat
from mimo_trt.entities.scheme import Scheme, SchemeKind, build_scheme

SCHEME_CHOICES = [kind.value for kind in SchemeKind]


def _compose(*decorators):
    def apply(func):
        for decorator in reversed(decorators):
            func = decorator(func)
        return func

    return apply


def parse_float_list(ctx, param, value: str | None) -> list[float] | None:
    """Click callback turning '4,8' into [4.0, 8.0]."""
    if value is None:
        return None
    try:
        values = [float(item) for item in value.split(",") if item.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}") from e
    if not values:
        raise click.BadParameter("at least one value is required")
    return values


antenna_options = _compose(
    click.option(
        "--m",
        "m",
        type=click.IntRange(1, MAX_ANTENNAS),
        default=2,
        show_default=True,
        help="Transmit antennas.",
    ),
    click.option(
        "--n",
        "n",
        type=click.IntRange(1, MAX_ANTENNAS),
        default=2,
        show_default=True,
        help="Receive antennas.",
    ),
)

scheme_options = _compose(
    click.option(
        "--scheme",
        type=click.Choice(SCHEME_CHOICES),
        default=SchemeKind.MIMO.value,
        show_default=True,
    ),
    click.option(
        "--l",
        "block_length",
        type=click.IntRange(min=1),
        default=2,
        show_default=True,
        help="Orthogonal design block length.",
    ),
    click.option(
        "--k-sym",
        "symbols_per_block",
        type=click.IntRange(min=1),
        default=2,
        show_default=True,
        help="Orthogonal design symbols per block.",
    ),
    click.option(
        "--max-rounds",
        type=click.IntRange(min=1),
        default=2,
        show_default=True,
        help="ARQ round limit L.",
    ),
)

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([fmt.value for fmt in ResultFormat]),
    default=ResultFormat.CSV.value,
    show_default=True,
    help="csv prints tables (or CSV rows); json prints structured objects.",
)

verbose_option = click.option(
    "--verbose", "-v", is_flag=True, default=False, help="Log at DEBUG level."
)

threads_option = click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=None,
    help="Worker threads; overrides TRT_THREADS and the settings file.",
)


def scheme_from_options(
    scheme: str, block_length: int, symbols_per_block: int, max_rounds: int
) -> Scheme:
    return build_scheme(
        scheme,
        block_length=block_length,
        symbols_per_block=symbols_per_block,
        max_rounds=max_rounds,
    )
