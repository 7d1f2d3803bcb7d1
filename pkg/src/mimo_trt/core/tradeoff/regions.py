"""Operating-region classification of (R, rho) points.

Inequalities are evaluated in the log2 domain, so rates of hundreds of bits
and SNRs of hundreds of dB do not overflow.
"""

import math

from mimo_trt.entities.channel import check_dimension
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.scheme import ArqLongTermStatic, Scheme
from mimo_trt.entities.tradeoff import RegionKind, RegionLabel


def _check_point(m: int, n: int, R: float, rho: float) -> None:
    check_dimension("m", m)
    check_dimension("n", n)
    if not R > 0.0:
        raise InvalidArgumentError(f"R must be positive, got {R}")
    if not rho > 1.0:
        raise InvalidArgumentError(f"rho must exceed 1, got {rho}")


def is_degenerate(m: int, n: int, R: float, log2_rho: float) -> bool:
    """R > min(m, n)·log2(rho): the rate grows faster than any region allows."""
    return R > min(m, n) * log2_rho


def classify_region(m: int, n: int, R: float, rho: float, delta: float) -> RegionLabel:
    """Rule-of-thumb region of (R, rho).

    The point is in region k when rho^k / 2^R <= delta and 2^R / rho^(k+1) <= delta.

    Raises:
        InvalidArgumentError: R <= 0, rho <= 1 or delta outside (0, 1).
    """
    _check_point(m, n, R, rho)
    if not 0.0 < delta < 1.0:
        raise InvalidArgumentError(f"delta must be in (0, 1), got {delta}")

    log2_rho = math.log2(rho)
    if is_degenerate(m, n, R, log2_rho):
        return RegionLabel(RegionKind.DEGENERATE, delta)

    log2_delta = math.log2(delta)
    for k in range(min(m, n)):
        if k * log2_rho - R <= log2_delta and R - (k + 1) * log2_rho <= log2_delta:
            return RegionLabel(RegionKind.IN_REGION, delta, k)
    return RegionLabel(RegionKind.TRANSITIONAL, delta)


def exact_region(m: int, n: int, R: float, rho: float) -> RegionLabel:
    """Asymptotic region k < R / log2(rho) < k + 1; integer ratios are transitional."""
    _check_point(m, n, R, rho)
    log2_rho = math.log2(rho)
    if is_degenerate(m, n, R, log2_rho):
        return RegionLabel(RegionKind.DEGENERATE, 0.0)

    ratio = R / log2_rho
    k = math.floor(ratio)
    if k == ratio or k >= min(m, n):
        return RegionLabel(RegionKind.TRANSITIONAL, 0.0)
    return RegionLabel(RegionKind.IN_REGION, 0.0, k)


def region_label(
    m: int, n: int, R: float, rho: float, delta: float, exact: bool = False
) -> RegionLabel:
    """Rule-of-thumb region of (R, rho), or the asymptotic one with `exact`.

    SNRs at or below 0 dB (rho <= 1) are degenerate for every rate.
    """
    if not exact and not 0.0 < delta < 1.0:
        raise InvalidArgumentError(f"delta must be in (0, 1), got {delta}")
    if rho <= 1.0:
        return RegionLabel(RegionKind.DEGENERATE, 0.0 if exact else delta)
    if exact:
        return exact_region(m, n, R, rho)
    return classify_region(m, n, R, rho, delta)


def scheme_region_rate(scheme: Scheme, R: float) -> float:
    """Rate placed on the optimal-scheme region map: R1 / L for ARQ, R otherwise."""
    if isinstance(scheme, ArqLongTermStatic):
        return R / scheme.max_rounds
    return R
