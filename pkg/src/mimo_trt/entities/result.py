from dataclasses import dataclass
from enum import StrEnum

RESULT_COLUMNS = (
    "scheme",
    "m",
    "n",
    "rate_bpcu",
    "snr_db",
    "p_outage",
    "ci_lo",
    "ci_hi",
    "samples",
    "hits",
    "region",
    "flagged",
)
ARQ_COLUMNS = ("eta", "p_err", "mean_rounds")


class ResultFormat(StrEnum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class ArqColumns:
    eta: float
    p_err: float
    mean_rounds: float


@dataclass(frozen=True)
class ResultRow:
    """One line of a result table; `arq` is present only for ARQ sweeps."""

    scheme: str
    m: int
    n: int
    rate_bpcu: float
    snr_db: float
    p_outage: float
    ci_lo: float
    ci_hi: float
    samples: int
    hits: int
    region: str
    flagged: bool
    arq: ArqColumns | None = None
