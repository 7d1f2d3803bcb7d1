from mimo_trt.core.simulation.confidence import binomial_interval, wilson_interval
from mimo_trt.core.simulation.engine import (
    BLOCK_SIZE,
    MonteCarloEngine,
    monotonicity_violations,
)
from mimo_trt.core.simulation.streams import point_stream_index

__all__ = [
    "BLOCK_SIZE",
    "MonteCarloEngine",
    "binomial_interval",
    "monotonicity_violations",
    "point_stream_index",
    "wilson_interval",
]
