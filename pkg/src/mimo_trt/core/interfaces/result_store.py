from abc import ABC, abstractmethod
from pathlib import Path

from mimo_trt.entities.result import ResultFormat, ResultRow


class ResultStore(ABC):
    """Interface for persisting result tables for external plotting and later analysis.

    Implementations must be bit-stable: serializing, parsing and serializing
    again yields identical text.
    """

    @abstractmethod
    def serialize(self, rows: list[ResultRow], fmt: ResultFormat) -> str:
        """Render rows as text in the given format."""

    @abstractmethod
    def parse(self, text: str, fmt: ResultFormat) -> list[ResultRow]:
        """Parse text produced by `serialize`, raising ResultParseError on malformed lines."""

    @abstractmethod
    def write_rows(self, rows: list[ResultRow], path: Path, fmt: ResultFormat):
        """Write rows to a file."""

    @abstractmethod
    def read_rows(self, path: Path) -> list[ResultRow]:
        """Read rows from a file, inferring the format from its suffix."""
