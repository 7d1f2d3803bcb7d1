"""Closed-form outage probabilities of scalar-equivalent Rayleigh channels."""

import math

from scipy.special import gammainc, gammaincinv

from mimo_trt.entities.errors import InvalidArgumentError


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0:
            raise InvalidArgumentError(f"{name} must be positive, got {value}")


def _check_level(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise InvalidArgumentError(f"probability level must be in (0, 1), got {p}")


def siso_exact(R: float, rho: float) -> float:
    """1 - exp(-(2^R - 1) / rho), the exact outage of the 1x1 Rayleigh channel."""
    _check_positive(R=R, rho=rho)
    return -math.expm1(-math.expm1(R * math.log(2.0)) / rho)


def gamma_exact(N: int, R_eff: float, rho: float, power_split: int) -> float:
    """P(N, power_split·(2^R_eff - 1) / rho), the outage of a gain summing N unit exponentials.

    With N = m·n and R_eff = (l / k_sym)·R this is the orthogonal-design outage.
    """
    if N < 1:
        raise InvalidArgumentError(f"N must be >= 1, got {N}")
    if power_split < 1:
        raise InvalidArgumentError(f"power_split must be >= 1, got {power_split}")
    _check_positive(R_eff=R_eff, rho=rho)
    x = power_split * math.expm1(R_eff * math.log(2.0)) / rho
    return float(gammainc(N, x))


def siso_rho_for_level(R: float, p: float) -> float:
    """Linear SNR at which the 1x1 outage at rate R equals p."""
    _check_positive(R=R)
    _check_level(p)
    return math.expm1(R * math.log(2.0)) / -math.log1p(-p)


def gamma_rho_for_level(N: int, R_eff: float, power_split: int, p: float) -> float:
    """Linear SNR at which `gamma_exact(N, R_eff, rho, power_split)` equals p."""
    _check_positive(R_eff=R_eff)
    _check_level(p)
    return power_split * math.expm1(R_eff * math.log(2.0)) / float(gammaincinv(N, p))
