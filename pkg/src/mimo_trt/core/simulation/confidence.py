import math

from scipy.stats import norm

RULE_OF_THREE = 3.0


def normal_quantile(confidence: float) -> float:
    """Two-sided standard normal quantile z for the given confidence level."""
    return float(norm.ppf(0.5 + confidence / 2.0))


def wilson_interval(hits: int, samples: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion hits / samples."""
    if samples <= 0:
        return 0.0, 1.0
    p_hat = hits / samples
    z = normal_quantile(confidence)
    z2 = z * z
    denominator = 1.0 + z2 / samples
    center = p_hat + z2 / (2.0 * samples)
    margin = z * math.sqrt(p_hat * (1.0 - p_hat) / samples + z2 / (4.0 * samples * samples))
    low = max(0.0, (center - margin) / denominator)
    high = min(1.0, (center + margin) / denominator)
    return min(low, p_hat), max(high, p_hat)


def binomial_interval(hits: int, samples: int, confidence: float) -> tuple[float, float, bool]:
    """Confidence interval used for estimates: Wilson, or the rule-of-three bound at zero hits.

    Returns:
        (ci_low, ci_high, upper_bound_only)
    """
    if hits == 0:
        return 0.0, min(1.0, RULE_OF_THREE / samples), True
    low, high = wilson_interval(hits, samples, confidence)
    return low, high, False
