import numpy as np

from mimo_trt.entities.channel import check_dimension
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.tradeoff import DmtCurve


def dmt_curve(m: int, n: int) -> DmtCurve:
    """Diversity-multiplexing tradeoff vertices (k, (m-k)(n-k)) for k = 0..min(m, n)."""
    check_dimension("m", m)
    check_dimension("n", n)
    vertices = tuple((k, (m - k) * (n - k)) for k in range(min(m, n) + 1))
    return DmtCurve(m=m, n=n, vertices=vertices)


def dmt_eval(curve: DmtCurve, r: float) -> float:
    """Optimal diversity gain at multiplexing gain r, interpolating linearly between vertices."""
    if not 0.0 <= r <= curve.max_multiplexing:
        raise InvalidArgumentError(
            f"multiplexing gain must be in [0, {curve.max_multiplexing}], got {r}"
        )
    ks, ds = zip(*curve.vertices, strict=True)
    return float(np.interp(r, ks, ds))


def dmt_right_derivative(curve: DmtCurve, k: int) -> int:
    """d'(k+) = d(k+1) - d(k), the slope of the segment leaving vertex k."""
    if not 0 <= k < curve.max_multiplexing:
        raise InvalidArgumentError(f"k must be in [0, {curve.max_multiplexing}), got {k}")
    return curve.diversity_at(k + 1) - curve.diversity_at(k)
