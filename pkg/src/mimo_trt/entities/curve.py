from dataclasses import dataclass

from mimo_trt.entities.errors import InvalidArgumentError


@dataclass(frozen=True)
class CurvePoint:
    """One measured point of an outage (or ARQ error) curve.

    Flagged points sit below the rare-event floor or carry too wide a CI and
    are excluded from fits.
    """

    snr_db: float
    log10_p: float
    weight: float = 1.0
    flagged: bool = False


@dataclass(frozen=True)
class SlopeEstimate:
    """Measured decay of log10 P per decade of SNR, reported as a positive diversity order."""

    slope_per_decade: float
    snr_window_db: tuple[float, float]
    points_used: int

    def __post_init__(self):
        if self.points_used < 2:
            raise InvalidArgumentError("a slope needs at least two points")


@dataclass(frozen=True)
class SpacingEstimate:
    """Horizontal SNR distance snr_b - snr_a between two curves at probability `level_p`.

    A negative spacing for R_high > R_low indicates noise and is flagged.
    """

    level_p: float
    spacing_db: float
    snr_a_db: float
    snr_b_db: float
    rates: tuple[float, float] | None = None

    @property
    def flagged(self) -> bool:
        if self.rates is None:
            return False
        return self.rates[1] > self.rates[0] and self.spacing_db < 0
