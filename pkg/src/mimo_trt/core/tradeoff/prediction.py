import math

from mimo_trt.core.tradeoff.coefficients import mimo_coefficients, scheme_coefficients
from mimo_trt.core.tradeoff.regions import is_degenerate, scheme_region_rate
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.scheme import Scheme
from mimo_trt.entities.tradeoff import TrtCoefficients

THREE_DB = 10.0 * math.log10(2.0)


def predict_log2_po(
    m: int, n: int, R: float, rho: float, k: int, scheme: Scheme | None = None
) -> float:
    """Asymptotic line c(k)·R - g(k)·log2(rho), without its unknown additive constant.

    The coefficients are those of `scheme` in region k, the optimal scheme by
    default. Degenerate points predict 0, i.e. P_o does not vanish: the region
    rate (R1 / L for ARQ) exceeds min(m, n)·log2(rho).
    """
    if not rho > 0.0:
        raise InvalidArgumentError(f"rho must be positive, got {rho}")
    if scheme is None:
        coefficients = mimo_coefficients(m, n, k)
        region_rate = R
    else:
        coefficients = scheme_coefficients(scheme, m, n, k).coefficients
        region_rate = scheme_region_rate(scheme, R)
    log2_rho = math.log2(rho)
    if is_degenerate(m, n, region_rate, log2_rho):
        return 0.0
    return float(coefficients.c) * R - float(coefficients.g) * log2_rho


def predict_snr_db(m: int, n: int, R: float, k: int, log10_po: float) -> float:
    """SNR in dB at which the region-k line reaches log10(P_o) = `log10_po` at rate R."""
    coefficients = mimo_coefficients(m, n, k)
    log2_po = log10_po * math.log2(10.0)
    log2_rho = (float(coefficients.c) * R - log2_po) / float(coefficients.g)
    return THREE_DB * log2_rho


def predicted_spacing_db(coefficients: TrtCoefficients, delta_r: float) -> float:
    """Horizontal dB distance between curves delta_r bpcu apart: 3.0103·delta_r / t."""
    if not delta_r > 0.0:
        raise InvalidArgumentError(f"delta_r must be positive, got {delta_r}")
    return THREE_DB * delta_r * float(coefficients.c / coefficients.g)


def predicted_slope_per_decade(coefficients: TrtCoefficients) -> float:
    return float(coefficients.g)
