"""Throughput-reliability tradeoff coefficients and operating-region tables per scheme.

Within region k a scheme's outage probability behaves as
log2 P ≈ c(k)·R − g(k)·log2(rho); the region is the open interval of
R / log2(rho) (eta / log2(rho) for ARQ) where that line holds.
"""

import math
from fractions import Fraction

from loguru import logger

from mimo_trt.core.tradeoff.dmt import dmt_curve, dmt_right_derivative
from mimo_trt.entities.channel import check_dimension
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.scheme import (
    ArqLongTermStatic,
    MimoLowerBound,
    MimoOptimal,
    Orthogonal,
    Scheme,
    VblastMl,
    check_scheme_for_spec,
)
from mimo_trt.entities.tradeoff import RegionBounds, SchemeTradeoff, TrtCoefficients


def _check_region_index(m: int, n: int, k: int) -> None:
    check_dimension("m", m)
    check_dimension("n", n)
    if not 0 <= k < min(m, n):
        raise InvalidArgumentError(f"k must be in [0, {min(m, n)}) for {m}x{n}, got {k}")


def mimo_coefficients(m: int, n: int, k: int) -> TrtCoefficients:
    """c(k) = m + n - (2k + 1) and g(k) = mn - k(k + 1) of the optimal scheme."""
    _check_region_index(m, n, k)
    return TrtCoefficients(k=k, c=Fraction(m + n - (2 * k + 1)), g=Fraction(m * n - k * (k + 1)))


def arq_region_count(m: int, n: int, max_rounds: int) -> int:
    """Number of rows in the ARQ region table: k = 0..min(floor(min(m, n) / L), min(m, n) - 1)."""
    return min(min(m, n) // max_rounds, min(m, n) - 1) + 1


def scheme_coefficients(scheme: Scheme, m: int, n: int, k: int = 0) -> SchemeTradeoff:
    """Coefficients of `scheme` in region k together with the region bounds.

    Raises:
        InvalidArgumentError: k outside the scheme's region table, or a scheme
            not supported on an m x n channel.
    """
    check_scheme_for_spec(scheme, m, n)
    match scheme:
        case MimoOptimal() | MimoLowerBound():
            coefficients = mimo_coefficients(m, n, k)
            region = RegionBounds(k=k, lo=Fraction(k), hi=Fraction(k + 1))
        case VblastMl():
            _check_single_region(scheme, k)
            coefficients = TrtCoefficients(k=0, c=Fraction(1), g=Fraction(m))
            region = RegionBounds(k=0, lo=Fraction(0), hi=Fraction(m))
        case Orthogonal():
            _check_single_region(scheme, k)
            coefficients = TrtCoefficients(k=0, c=m * n / scheme.code_rate, g=Fraction(m * n))
            region = RegionBounds(k=0, lo=Fraction(0), hi=scheme.code_rate)
        case ArqLongTermStatic(max_rounds=max_rounds):
            if not 0 <= k < arq_region_count(m, n, max_rounds):
                raise InvalidArgumentError(
                    f"k={k} is outside the region table of {scheme.tag} on {m}x{n}"
                )
            mimo = mimo_coefficients(m, n, k)
            coefficients = TrtCoefficients(k=k, c=mimo.c / max_rounds, g=mimo.g)
            cap = Fraction(min(m, n))
            region = RegionBounds(
                k=k,
                lo=min(Fraction(k * max_rounds), cap),
                hi=min(Fraction((k + 1) * max_rounds), cap),
            )
            if region.empty:
                logger.warning("Region k={} of {} on {}x{} is empty", k, scheme.tag, m, n)
        case _:
            raise InvalidArgumentError(f"unsupported scheme {scheme!r}")
    return SchemeTradeoff(coefficients=coefficients, region=region)


def _check_single_region(scheme: Scheme, k: int) -> None:
    if k != 0:
        raise InvalidArgumentError(f"{scheme.tag} has a single region k=0, got k={k}")


def scheme_regions(scheme: Scheme, m: int, n: int) -> list[RegionBounds]:
    """The region table of a scheme, empty regions included."""
    match scheme:
        case VblastMl() | Orthogonal():
            count = 1
        case ArqLongTermStatic(max_rounds=max_rounds):
            count = arq_region_count(m, n, max_rounds)
        case _:
            count = min(m, n)
    return [scheme_coefficients(scheme, m, n, k).region for k in range(count)]


def locate_scheme_region(scheme: Scheme, m: int, n: int, R: float, rho: float) -> int | None:
    """Index of the region whose open interval contains R / log2(rho), or None."""
    if not rho > 1.0:
        raise InvalidArgumentError(f"rho must exceed 1, got {rho}")
    if not R > 0.0:
        raise InvalidArgumentError(f"R must be positive, got {R}")
    ratio = R / math.log2(rho)
    for region in scheme_regions(scheme, m, n):
        if region.contains(ratio):
            return region.k
    return None


def identity_check(m: int, n: int) -> bool:
    """True iff g(k) = d(k) - k·d'(k+) and c(k) = -d'(k+) hold for every region k."""
    curve = dmt_curve(m, n)
    for k in range(min(m, n)):
        coefficients = mimo_coefficients(m, n, k)
        slope = dmt_right_derivative(curve, k)
        if coefficients.g != curve.diversity_at(k) - k * slope or coefficients.c != -slope:
            return False
    return True
