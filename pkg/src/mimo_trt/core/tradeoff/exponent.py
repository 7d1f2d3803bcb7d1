"""Supremum of the outage exponent maximand f(alpha) = sum_i (|m-n| + 2i - 1)·alpha_i.

alpha is ascending (alpha_1 <= ... <= alpha_d, d = min(m, n)), non-negative,
sums to at most 1 and has every entry capped at log2(rho)/R + epsilon. Within
region k the supremum equals c(k) + k(k + 1)·ratio.
"""

import itertools

import numpy as np

from mimo_trt.core.tradeoff.coefficients import mimo_coefficients
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.tradeoff import ExponentProblem

MAX_GRID_DIMENSION = 3
COARSE_STEP = 0.05
_SLACK = 1e-9


def check_feasible(problem: ExponentProblem, k: int) -> None:
    """Require 1/(k+1) + eps < ratio < 1/k - eps (ratio > 1 + eps for k = 0) and k < min(m, n)."""
    if not 0 <= k < problem.dimension:
        raise InvalidArgumentError(f"k must be in [0, {problem.dimension}), got {k}")
    low = 1.0 / (k + 1) + problem.epsilon
    high = 1.0 / k - problem.epsilon if k > 0 else float("inf")
    if not low < problem.ratio < high:
        raise InvalidArgumentError(
            f"ratio {problem.ratio} is outside region k={k} (epsilon={problem.epsilon})"
        )


def closed_form_sup(problem: ExponentProblem, k: int) -> float:
    """c(k) + k(k + 1)·ratio, the supremum inside region k."""
    check_feasible(problem, k)
    coefficients = mimo_coefficients(problem.m, problem.n, k)
    return float(coefficients.c) + k * (k + 1) * problem.ratio


def oracle_tolerance(problem: ExponentProblem) -> float:
    return 2.0 * problem.grid_step * sum(problem.weights)


def exponent_sup_vertex(problem: ExponentProblem, k: int) -> float:
    """Exact supremum: fill the largest coefficients first, each up to the cap, within the budget.

    The maximand is linear and its coefficients increase with i, so this
    greedy point is the optimal vertex of the constraint polytope.
    """
    check_feasible(problem, k)
    cap = min(problem.cap, 1.0)
    budget = 1.0
    total = 0.0
    for weight in reversed(problem.weights):
        share = min(cap, budget)
        total += weight * share
        budget -= share
        if budget <= 0.0:
            break
    return total


def _grid_maximum(
    weights: np.ndarray, cap: float, centre: np.ndarray | None, radius: float, step: float
) -> tuple[float, np.ndarray]:
    dimension = len(weights)
    axes = []
    for i in range(dimension):
        low, high = (0.0, cap) if centre is None else (centre[i] - radius, centre[i] + radius)
        axis = np.arange(max(low, 0.0), min(high, cap) + step / 2.0, step)
        axes.append(np.unique(np.clip(np.append(axis, cap), 0.0, cap)))
    points = np.array(list(itertools.product(*axes)))
    feasible = (
        np.all(np.diff(points, axis=1) >= -_SLACK, axis=1)
        & (points.sum(axis=1) <= 1.0 + _SLACK)
        & (points.max(axis=1) <= cap + _SLACK)
    )
    candidates = points[feasible]
    values = candidates @ weights
    best = int(np.argmax(values))
    return float(values[best]), candidates[best]


def exponent_sup_oracle(problem: ExponentProblem, k: int) -> float:
    """Grid estimate of the supremum: a coarse grid over the feasible set, refined at `grid_step`.

    Agrees with `closed_form_sup` within 2·grid_step·sum(weights).

    Raises:
        InvalidArgumentError: ratio outside region k, or min(m, n) above 3.
    """
    check_feasible(problem, k)
    if problem.dimension > MAX_GRID_DIMENSION:
        raise InvalidArgumentError(
            f"grid oracle supports min(m, n) <= {MAX_GRID_DIMENSION}, got {problem.dimension}"
        )
    weights = np.asarray(problem.weights, dtype=float)
    cap = min(problem.cap, 1.0)
    coarse = max(COARSE_STEP, problem.grid_step)
    _, centre = _grid_maximum(weights, cap, None, 0.0, coarse)
    value, _ = _grid_maximum(weights, cap, centre, coarse, problem.grid_step)
    return value
