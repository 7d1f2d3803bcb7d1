import re
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from mimo_trt.entities.errors import InvalidArgumentError

VBLAST_MAX_ANTENNAS = 8


class SchemeKind(StrEnum):
    MIMO = "mimo"
    MIMO_LOWER_BOUND = "mimo-lb"
    VBLAST = "vblast"
    ORTHOGONAL = "orth"
    ARQ = "arq"


@dataclass(frozen=True)
class MimoOptimal:
    """Optimal space-time coding; outage is log det(I + (rho/m) H Hᴴ) < R."""

    kind = SchemeKind.MIMO

    @property
    def tag(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class MimoLowerBound:
    """Outage lower bound without the 1/m power split: log det(I + rho H Hᴴ) < R."""

    kind = SchemeKind.MIMO_LOWER_BOUND

    @property
    def tag(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class VblastMl:
    """Per-antenna independent encoding at R/m with joint ML reception."""

    kind = SchemeKind.VBLAST

    @property
    def tag(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class Orthogonal:
    """Orthogonal constellation sending `symbols_per_block` symbols over `block_length` uses.

    Alamouti is Orthogonal(block_length=2, symbols_per_block=2).
    """

    block_length: int
    symbols_per_block: int

    kind = SchemeKind.ORTHOGONAL

    def __post_init__(self):
        if not 1 <= self.symbols_per_block <= self.block_length:
            raise InvalidArgumentError(
                "orthogonal scheme requires 1 <= k_sym <= l, got "
                f"l={self.block_length}, k_sym={self.symbols_per_block}"
            )

    @property
    def code_rate(self) -> Fraction:
        """Symbols per channel use, k_sym / l."""
        return Fraction(self.symbols_per_block, self.block_length)

    @property
    def tag(self) -> str:
        return f"{self.kind.value}-l{self.block_length}-k{self.symbols_per_block}"


@dataclass(frozen=True)
class ArqLongTermStatic:
    """ARQ with at most `max_rounds` rounds, all seeing the same channel realization."""

    max_rounds: int

    kind = SchemeKind.ARQ

    def __post_init__(self):
        if self.max_rounds < 1:
            raise InvalidArgumentError(f"ARQ requires L >= 1, got {self.max_rounds}")

    @property
    def tag(self) -> str:
        return f"{self.kind.value}-L{self.max_rounds}"


Scheme = MimoOptimal | MimoLowerBound | VblastMl | Orthogonal | ArqLongTermStatic

ALAMOUTI = Orthogonal(block_length=2, symbols_per_block=2)

_ORTHOGONAL_TAG = re.compile(r"^orth-l(\d+)-k(\d+)$")
_ARQ_TAG = re.compile(r"^arq-L(\d+)$")


def build_scheme(
    kind: SchemeKind | str,
    block_length: int = 2,
    symbols_per_block: int = 2,
    max_rounds: int = 2,
) -> Scheme:
    """Create a scheme from its kind and the parameters that kind uses."""
    match SchemeKind(kind):
        case SchemeKind.MIMO:
            return MimoOptimal()
        case SchemeKind.MIMO_LOWER_BOUND:
            return MimoLowerBound()
        case SchemeKind.VBLAST:
            return VblastMl()
        case SchemeKind.ORTHOGONAL:
            return Orthogonal(block_length=block_length, symbols_per_block=symbols_per_block)
        case SchemeKind.ARQ:
            return ArqLongTermStatic(max_rounds=max_rounds)


def parse_scheme_tag(tag: str) -> Scheme:
    """Inverse of `Scheme.tag`.

    Examples:
        >>> parse_scheme_tag("orth-l2-k2")
        Orthogonal(block_length=2, symbols_per_block=2)
    """
    if match := _ORTHOGONAL_TAG.match(tag):
        return Orthogonal(block_length=int(match.group(1)), symbols_per_block=int(match.group(2)))
    if match := _ARQ_TAG.match(tag):
        return ArqLongTermStatic(max_rounds=int(match.group(1)))
    try:
        kind = SchemeKind(tag)
    except ValueError as error:
        raise InvalidArgumentError(f"unknown scheme tag '{tag}'") from error
    if kind in (SchemeKind.ORTHOGONAL, SchemeKind.ARQ):
        raise InvalidArgumentError(f"scheme tag '{tag}' is missing its parameters")
    return build_scheme(kind)


def check_scheme_for_spec(scheme: Scheme, m: int, n: int) -> None:
    """Raise InvalidArgumentError when the scheme cannot run on an m x n channel."""
    if isinstance(scheme, VblastMl):
        if m != n:
            raise InvalidArgumentError(f"V-BLAST requires m == n, got m={m}, n={n}")
        if m > VBLAST_MAX_ANTENNAS:
            raise InvalidArgumentError(
                f"V-BLAST subset enumeration is limited to m <= {VBLAST_MAX_ANTENNAS}, got {m}"
            )
