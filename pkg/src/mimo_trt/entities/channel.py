from dataclasses import dataclass
from typing import Self

import numpy as np

from mimo_trt.entities.errors import InvalidArgumentError

MAX_ANTENNAS = 16


def check_dimension(name: str, value: int) -> None:
    """Raise InvalidArgumentError unless 1 <= value <= MAX_ANTENNAS."""
    if isinstance(value, bool) or not isinstance(value, int | np.integer):
        raise InvalidArgumentError(f"{name} must be an integer, got {value!r}")
    if not 1 <= value <= MAX_ANTENNAS:
        raise InvalidArgumentError(f"{name} must be in [1, {MAX_ANTENNAS}], got {value}")


@dataclass(frozen=True)
class ComplexMatrix:
    """Dense complex channel realization H with `rows` receive and `cols` transmit antennas.

    The backing array is copied on construction and marked read-only so the
    value can be shared between threads.
    """

    data: np.ndarray

    def __post_init__(self):
        array = np.array(self.data, dtype=np.complex128, copy=True)
        if array.ndim != 2:
            raise InvalidArgumentError(f"channel matrix must be 2-D, got shape {array.shape}")
        check_dimension("rows", array.shape[0])
        check_dimension("cols", array.shape[1])
        array.setflags(write=False)
        object.__setattr__(self, "data", array)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: list[complex]) -> Self:
        """Build a matrix from row-major entries.

        Args:
            rows: Number of rows (receive antennas).
            cols: Number of columns (transmit antennas).
            entries: rows * cols complex path gains in row-major order.
        """
        check_dimension("rows", rows)
        check_dimension("cols", cols)
        if len(entries) != rows * cols:
            raise InvalidArgumentError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        return cls(np.asarray(entries, dtype=np.complex128).reshape(rows, cols))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Self:
        return cls(np.zeros((rows, cols), dtype=np.complex128))

    @classmethod
    def identity(cls, size: int, scale: complex = 1.0) -> Self:
        return cls(np.eye(size, dtype=np.complex128) * scale)

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])


@dataclass(frozen=True)
class RngStream:
    """Counter-based random stream selector.

    A stream is identified by (seed, stream_index); Monte-Carlo blocks derive
    their own sub-streams from it, so the same pair always yields the same
    sample sequence no matter how many threads consume it.
    """

    seed: int
    stream_index: int = 0

    def __post_init__(self):
        for name in ("seed", "stream_index"):
            value = getattr(self, name)
            if not 0 <= value < 2**64:
                raise InvalidArgumentError(
                    f"{name} must be an unsigned 64-bit integer, got {value}"
                )

    def generator(self, block_index: int | None = None) -> np.random.Generator:
        """Return a Philox generator for this stream, or for one of its blocks.

        Args:
            block_index: Optional sub-stream selector used by the Monte-Carlo engine.
        """
        spawn_key = (self.stream_index,)
        if block_index is not None:
            spawn_key = (self.stream_index, block_index)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=spawn_key)
        return np.random.Generator(np.random.Philox(sequence))


@dataclass(frozen=True)
class EigenSpectrum:
    """Ascending, non-negative eigenvalues of H·Hᴴ (length min(rows, cols))."""

    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ChannelSpec:
    """Antenna configuration: m transmit and n receive antennas."""

    m: int
    n: int

    def __post_init__(self):
        check_dimension("m", self.m)
        check_dimension("n", self.n)

    def check_matrix(self, H: ComplexMatrix) -> None:
        """Raise InvalidArgumentError unless H is n x m."""
        if (H.rows, H.cols) != (self.n, self.m):
            raise InvalidArgumentError(
                f"channel is {H.rows}x{H.cols}, expected {self.n}x{self.m} (n x m)"
            )
