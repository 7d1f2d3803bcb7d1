"""Results of the use-cases behind each command, ready for rendering or JSON output."""

from dataclasses import dataclass, field
from enum import StrEnum

from mimo_trt.entities.curve import SlopeEstimate, SpacingEstimate
from mimo_trt.entities.tradeoff import RegionLabel, SchemeTradeoff


@dataclass(frozen=True)
class PredictedSpacing:
    delta_r: float
    spacing_db: float


@dataclass(frozen=True)
class RegionPrediction:
    tradeoff: SchemeTradeoff
    slope_per_decade: float
    spacings: tuple[PredictedSpacing, ...] = ()


@dataclass(frozen=True)
class PointPrediction:
    """Region and asymptotic outage line at one (R, SNR) point.

    `log2_po` is None when the point lies outside every region of the scheme.
    """

    rate_bpcu: float
    snr_db: float
    region: RegionLabel
    exact_region: RegionLabel
    scheme_region: int | None
    log2_po: float | None


@dataclass(frozen=True)
class PredictionReport:
    scheme: str
    m: int
    n: int
    regions: tuple[RegionPrediction, ...]
    point: PointPrediction | None = None


@dataclass(frozen=True)
class SlopeComparison:
    rate_bpcu: float
    measured: SlopeEstimate | None
    predicted: float | None
    note: str = ""

    @property
    def residual(self) -> float | None:
        if self.measured is None or self.predicted is None:
            return None
        return self.measured.slope_per_decade - self.predicted


@dataclass(frozen=True)
class SpacingComparison:
    rates: tuple[float, float]
    level_p: float
    measured: SpacingEstimate | None
    predicted_db: float | None
    note: str = ""

    @property
    def residual_db(self) -> float | None:
        if self.measured is None or self.predicted_db is None:
            return None
        return self.measured.spacing_db - self.predicted_db


@dataclass(frozen=True)
class CurveFamilyAnalysis:
    """Slopes and spacings of all curves sharing one scheme and antenna configuration."""

    scheme: str
    m: int
    n: int
    slopes: tuple[SlopeComparison, ...]
    spacings: tuple[SpacingComparison, ...]


@dataclass(frozen=True)
class AnalysisReport:
    families: tuple[CurveFamilyAnalysis, ...]


class VerifyOracle(StrEnum):
    IDENTITIES = "identities"
    EXPONENT = "exponent"
    SISO = "siso"
    GAMMA = "gamma"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    expected: float
    tolerance: float
    detail: str = ""

    @property
    def delta(self) -> float:
        return self.measured - self.expected


@dataclass(frozen=True)
class VerificationReport:
    oracle: VerifyOracle
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
