from mimo_trt.core.channels.arq import arq_outcome, arq_rounds
from mimo_trt.core.channels.outage import (
    mimo_outage,
    mimo_outage_lower,
    orthogonal_outage,
    outage_batch,
    vblast_outage,
)

__all__ = [
    "arq_outcome",
    "arq_rounds",
    "mimo_outage",
    "mimo_outage_lower",
    "orthogonal_outage",
    "outage_batch",
    "vblast_outage",
]
