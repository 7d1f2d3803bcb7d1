from pydantic import BaseModel, ConfigDict, Field, model_validator

from mimo_trt.entities.channel import MAX_ANTENNAS
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.estimate import MIN_MAX_SAMPLES, SamplingPolicy
from mimo_trt.entities.scheme import Scheme, SchemeKind, build_scheme, check_scheme_for_spec


def inclusive_grid(start: float, stop: float, step: float) -> list[float]:
    """Grid start, start + step, ... up to stop inclusive, computed by index to avoid drift."""
    if step <= 0:
        raise InvalidArgumentError(f"step must be positive, got {step}")
    if start > stop:
        raise InvalidArgumentError(f"start {start} exceeds stop {stop}")
    count = int((stop - start) / step + 1e-9) + 1
    return [round(start + i * step, 12) for i in range(count)]


class SweepConfig(BaseModel):
    """Validated description of an outage-curve sweep (flags or a JSON config file)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    scheme: SchemeKind = SchemeKind.MIMO
    block_length: int = Field(default=2, ge=1)
    symbols_per_block: int = Field(default=2, ge=1)
    max_rounds: int = Field(default=2, ge=1)
    m: int = Field(default=2, ge=1, le=MAX_ANTENNAS)
    n: int = Field(default=2, ge=1, le=MAX_ANTENNAS)
    rates: list[float] = Field(min_length=1)
    snr_start_db: float
    snr_stop_db: float
    snr_step_db: float = Field(gt=0)
    max_samples: int = Field(default=1_000_000, ge=MIN_MAX_SAMPLES)
    target_hits: int = Field(default=200, ge=1)
    ci_confidence: float = Field(default=0.95, gt=0, lt=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    delta: float = Field(default=0.1, gt=0, lt=1)

    @model_validator(mode="after")
    def _check_consistency(self) -> "SweepConfig":
        if self.snr_start_db > self.snr_stop_db:
            raise ValueError("snr_start_db must not exceed snr_stop_db")
        if any(rate <= 0 for rate in self.rates):
            raise ValueError("rates must be positive")
        check_scheme_for_spec(self.build_scheme(), self.m, self.n)
        return self

    def build_scheme(self) -> Scheme:
        return build_scheme(
            self.scheme,
            block_length=self.block_length,
            symbols_per_block=self.symbols_per_block,
            max_rounds=self.max_rounds,
        )

    def policy(self) -> SamplingPolicy:
        return SamplingPolicy(
            max_samples=self.max_samples,
            target_hits=self.target_hits,
            ci_confidence=self.ci_confidence,
        )

    def snr_grid_db(self) -> list[float]:
        return inclusive_grid(self.snr_start_db, self.snr_stop_db, self.snr_step_db)
