from dataclasses import dataclass

from mimo_trt.entities.errors import InvalidArgumentError

MIN_MAX_SAMPLES = 1_000


@dataclass(frozen=True)
class SamplingPolicy:
    """Adaptive stopping rule: sample until `target_hits` events or `max_samples` draws."""

    max_samples: int = 1_000_000
    target_hits: int = 200
    ci_confidence: float = 0.95

    def __post_init__(self):
        if self.max_samples < MIN_MAX_SAMPLES:
            raise InvalidArgumentError(
                f"max_samples must be >= {MIN_MAX_SAMPLES}, got {self.max_samples}"
            )
        if self.target_hits < 1:
            raise InvalidArgumentError(f"target_hits must be >= 1, got {self.target_hits}")
        if not 0.0 < self.ci_confidence < 1.0:
            raise InvalidArgumentError(
                f"ci_confidence must be in (0, 1), got {self.ci_confidence}"
            )


@dataclass(frozen=True)
class ArqOutcome:
    """Round count and delivery status for one ARQ message."""

    rounds_used: int
    delivered: bool


@dataclass(frozen=True)
class OutageEstimate:
    """Monte-Carlo estimate of the outage probability at one (rate, SNR) point.

    When no outage was observed, `upper_bound_only` is set, `p_hat` is 0 and
    `ci_high` is the rule-of-three bound 3 / samples.
    """

    scheme: str
    m: int
    n: int
    rate_bpcu: float
    snr_db: float
    p_hat: float
    ci_low: float
    ci_high: float
    samples: int
    hits: int
    seed: int
    upper_bound_only: bool = False

    @property
    def half_width(self) -> float:
        return (self.ci_high - self.ci_low) / 2.0

    @property
    def standard_error(self) -> float:
        return (self.p_hat * (1.0 - self.p_hat) / self.samples) ** 0.5


@dataclass(frozen=True)
class ArqEstimate:
    """Long-term throughput, error probability and round usage of an ARQ link.

    `failures` messages out of `samples` were abandoned after L rounds;
    [ci_low, ci_high] is the Wilson interval for `p_err`.
    """

    scheme: str
    m: int
    n: int
    r1_bpcu: float
    snr_db: float
    eta: float
    p_err: float
    ci_low: float
    ci_high: float
    mean_rounds: float
    samples: int
    failures: int
    seed: int
    upper_bound_only: bool = False

    @property
    def standard_error(self) -> float:
        return (self.p_err * (1.0 - self.p_err) / self.samples) ** 0.5
