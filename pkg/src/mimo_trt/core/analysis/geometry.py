"""Measured geometry of outage curves: local slopes and horizontal spacings.

Curves are handled in (snr_db, log10 p) coordinates; a decade of SNR is 10 dB.
"""

import math
from collections.abc import Iterable, Sequence

import numpy as np

from mimo_trt.entities.curve import CurvePoint, SlopeEstimate, SpacingEstimate
from mimo_trt.entities.errors import InsufficientDataError, InvalidArgumentError
from mimo_trt.entities.estimate import ArqEstimate, OutageEstimate

DEFAULT_WINDOW_DB = 10.0
MAX_RELATIVE_HALF_WIDTH = 0.25
MIN_HITS = 20
RARE_EVENT_FLOOR = 1e-6


def make_curve_point(
    snr_db: float, p: float, ci_low: float, ci_high: float, hits: int
) -> CurvePoint:
    """Build a curve point, flagging it when it cannot support a fit.

    A point is flagged with fewer than MIN_HITS events, a relative CI half-width
    above 25 %, or an estimate below the rare-event floor. Zero-hit points are
    placed at their upper bound so every field stays finite.
    """
    if hits == 0 or p <= 0.0:
        bound = math.log10(max(ci_high, 1e-300))
        return CurvePoint(snr_db=snr_db, log10_p=bound, weight=0.0, flagged=True)

    relative_half_width = (ci_high - ci_low) / (2.0 * p)
    flagged = (
        hits < MIN_HITS or relative_half_width > MAX_RELATIVE_HALF_WIDTH or p < RARE_EVENT_FLOOR
    )
    if ci_low > 0.0:
        log_half_width = (math.log10(ci_high) - math.log10(ci_low)) / 2.0
        weight = 1.0 / log_half_width**2 if log_half_width > 0.0 else 1.0
    else:
        weight = 0.0
    return CurvePoint(snr_db=snr_db, log10_p=math.log10(p), weight=weight, flagged=flagged)


def to_curve_points(estimates: Iterable[OutageEstimate | ArqEstimate]) -> list[CurvePoint]:
    """Curve points of a sequence of outage (or ARQ error) estimates, sorted by SNR."""
    points = []
    for estimate in estimates:
        if isinstance(estimate, ArqEstimate):
            p, hits = estimate.p_err, estimate.failures
        else:
            p, hits = estimate.p_hat, estimate.hits
        points.append(make_curve_point(estimate.snr_db, p, estimate.ci_low, estimate.ci_high, hits))
    return sorted(points, key=lambda point: point.snr_db)


def _usable(points: Iterable[CurvePoint]) -> list[CurvePoint]:
    return sorted((point for point in points if not point.flagged), key=lambda point: point.snr_db)


def centred_window(centre_db: float, width_db: float = DEFAULT_WINDOW_DB) -> tuple[float, float]:
    return centre_db - width_db / 2.0, centre_db + width_db / 2.0


def deepest_window(
    points: Sequence[CurvePoint], width_db: float = DEFAULT_WINDOW_DB
) -> tuple[float, float]:
    """Window of `width_db` ending at the highest-SNR unflagged point."""
    usable = _usable(points)
    if not usable:
        raise InsufficientDataError("curve has no unflagged points")
    top = usable[-1].snr_db
    return top - width_db, top


def local_slope(points: Sequence[CurvePoint], window_db: tuple[float, float]) -> SlopeEstimate:
    """Weighted least-squares decay of log10 p per decade of SNR inside `window_db`.

    The slope is negated, so a curve falling four decades per decade reports 4.

    Raises:
        InsufficientDataError: fewer than two unflagged points at distinct SNRs in the window.
    """
    low, high = window_db
    if low > high:
        raise InvalidArgumentError(f"window start {low} exceeds window end {high}")
    inside = [point for point in _usable(points) if low <= point.snr_db <= high]
    if len({point.snr_db for point in inside}) < 2:
        raise InsufficientDataError(
            f"need two unflagged points in [{low}, {high}] dB, found {len(inside)}"
        )

    x = np.array([point.snr_db / 10.0 for point in inside])
    y = np.array([point.log10_p for point in inside])
    weights = np.array([point.weight for point in inside])
    if not np.any(weights > 0.0):
        weights = np.ones_like(x)
    slope, _ = np.polyfit(x, y, 1, w=np.sqrt(weights))
    return SlopeEstimate(
        slope_per_decade=float(-slope),
        snr_window_db=(inside[0].snr_db, inside[-1].snr_db),
        points_used=len(inside),
    )


def snr_at_level(points: Sequence[CurvePoint], level_p: float) -> float:
    """SNR where the curve first crosses `level_p`, interpolating linearly in (snr_db, log10 p).

    Raises:
        InsufficientDataError: no pair of adjacent unflagged points brackets the level.
    """
    target = math.log10(level_p)
    usable = _usable(points)
    for left, right in zip(usable, usable[1:], strict=False):
        if min(left.log10_p, right.log10_p) <= target <= max(left.log10_p, right.log10_p):
            if right.log10_p == left.log10_p:
                return left.snr_db
            fraction = (target - left.log10_p) / (right.log10_p - left.log10_p)
            return left.snr_db + fraction * (right.snr_db - left.snr_db)
    raise InsufficientDataError(f"level {level_p:g} is not bracketed by unflagged points")


def spacing_at_level(
    curve_a: Sequence[CurvePoint],
    curve_b: Sequence[CurvePoint],
    level_p: float,
    rates: tuple[float, float] | None = None,
) -> SpacingEstimate:
    """Horizontal distance snr_b - snr_a between two curves at probability `level_p`."""
    if not 0.0 < level_p < 1.0:
        raise InvalidArgumentError(f"level must be in (0, 1), got {level_p}")
    snr_a = snr_at_level(curve_a, level_p)
    snr_b = snr_at_level(curve_b, level_p)
    return SpacingEstimate(
        level_p=level_p, spacing_db=snr_b - snr_a, snr_a_db=snr_a, snr_b_db=snr_b, rates=rates
    )
