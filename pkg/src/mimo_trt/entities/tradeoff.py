from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from mimo_trt.entities.errors import InvalidArgumentError


@dataclass(frozen=True)
class DmtCurve:
    """Vertices (k, (m-k)(n-k)) of the diversity-multiplexing tradeoff, k = 0..min(m, n)."""

    m: int
    n: int
    vertices: tuple[tuple[int, int], ...]

    @property
    def max_multiplexing(self) -> int:
        return min(self.m, self.n)

    def diversity_at(self, k: int) -> int:
        return self.vertices[k][1]


@dataclass(frozen=True)
class TrtCoefficients:
    """Rate coefficient c, reliability gain g and throughput gain t = g / c of region k."""

    k: int
    c: Fraction
    g: Fraction

    @property
    def t(self) -> Fraction:
        return self.g / self.c


@dataclass(frozen=True)
class RegionBounds:
    """Open interval (lo, hi) of R / log2(rho) (or eta / log2(rho) for ARQ) for region k."""

    k: int
    lo: Fraction
    hi: Fraction

    @property
    def empty(self) -> bool:
        return self.hi <= self.lo

    def contains(self, ratio: float) -> bool:
        return not self.empty and float(self.lo) < ratio < float(self.hi)


@dataclass(frozen=True)
class SchemeTradeoff:
    coefficients: TrtCoefficients
    region: RegionBounds


class RegionKind(Enum):
    IN_REGION = "in-region"
    TRANSITIONAL = "transitional"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class RegionLabel:
    """Operating-region classification of an (R, rho) point under threshold `delta`."""

    kind: RegionKind
    delta: float
    k: int | None = None

    def __post_init__(self):
        if (self.kind is RegionKind.IN_REGION) != (self.k is not None):
            raise InvalidArgumentError("a region index is required exactly for in-region labels")

    @property
    def label(self) -> str:
        """Short text form used in result files: the index k, 'transitional' or 'degenerate'."""
        return str(self.k) if self.kind is RegionKind.IN_REGION else self.kind.value

    def same_region(self, other: "RegionLabel") -> bool:
        return self.kind == other.kind and self.k == other.k


@dataclass(frozen=True)
class ExponentProblem:
    """Maximization of f(alpha) = sum_i (|m-n| + 2i - 1) alpha_i for a given log2(rho) / R.

    alpha is ascending, sums to at most 1 and its largest entry is capped at
    ratio + epsilon.
    """

    m: int
    n: int
    ratio: float
    epsilon: float = 0.0
    grid_step: float = 0.005

    def __post_init__(self):
        if self.ratio <= 0:
            raise InvalidArgumentError(f"ratio must be positive, got {self.ratio}")
        if self.grid_step <= 0:
            raise InvalidArgumentError(f"grid_step must be positive, got {self.grid_step}")
        if self.epsilon < 0:
            raise InvalidArgumentError(f"epsilon must be non-negative, got {self.epsilon}")

    @property
    def dimension(self) -> int:
        return min(self.m, self.n)

    @property
    def weights(self) -> tuple[int, ...]:
        """Coefficients |m-n| + 2i - 1 for i = 1..min(m, n)."""
        return tuple(abs(self.m - self.n) + 2 * i - 1 for i in range(1, self.dimension + 1))

    @property
    def cap(self) -> float:
        return self.ratio + self.epsilon
