import numpy as np
import pytest
from scipy.optimize import linprog

from mimo_trt.core.tradeoff import (
    closed_form_sup,
    exponent_sup_oracle,
    exponent_sup_vertex,
    oracle_tolerance,
)
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.tradeoff import ExponentProblem


def _linprog_sup(problem: ExponentProblem) -> float:
    dimension = problem.dimension
    weights = np.asarray(problem.weights, dtype=float)
    ordering = np.zeros((dimension - 1, dimension))
    for i in range(dimension - 1):
        ordering[i, i] = 1.0
        ordering[i, i + 1] = -1.0
    a_ub = np.vstack([ordering, np.ones((1, dimension))]) if dimension > 1 else np.ones((1, 1))
    b_ub = np.append(np.zeros(dimension - 1), 1.0)
    bounds = [(0.0, min(problem.cap, 1.0))] * dimension
    result = linprog(-weights, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    return -result.fun


@pytest.mark.parametrize(
    "m, n, ratio, k, expected",
    [(2, 2, 1.5, 0, 3.0), (2, 2, 0.6, 1, 2.2), (3, 3, 0.7, 1, 4.4)],
)
def test_exponent_sup_vertex_should_match_closed_form(m, n, ratio, k, expected):
    # Arrange
    problem = ExponentProblem(m=m, n=n, ratio=ratio)

    # Act / Assert
    assert exponent_sup_vertex(problem, k) == pytest.approx(expected)
    assert closed_form_sup(problem, k) == pytest.approx(expected)


@pytest.mark.parametrize(
    "m, n, ratio, k",
    [
        (2, 2, 1.5, 0),
        (2, 2, 0.6, 1),
        (3, 3, 0.7, 1),
        (3, 3, 0.4, 2),
        (2, 3, 0.8, 1),
        (3, 1, 2.0, 0),
    ],
)
def test_exponent_sup_oracle_should_agree_with_closed_form_within_tolerance(m, n, ratio, k):
    # Arrange
    problem = ExponentProblem(m=m, n=n, ratio=ratio)

    # Act
    value = exponent_sup_oracle(problem, k)

    # Assert
    assert abs(value - closed_form_sup(problem, k)) <= oracle_tolerance(problem)


@pytest.mark.parametrize(
    "m, n, ratio, k",
    [(4, 4, 0.3, 3), (5, 3, 0.45, 2), (6, 6, 0.9, 1), (8, 2, 3.0, 0), (4, 7, 0.26, 3)],
)
def test_exponent_sup_vertex_should_match_linear_program(m, n, ratio, k):
    # Arrange
    problem = ExponentProblem(m=m, n=n, ratio=ratio)

    # Act / Assert
    assert exponent_sup_vertex(problem, k) == pytest.approx(_linprog_sup(problem), abs=1e-7)
    assert exponent_sup_vertex(problem, k) == pytest.approx(closed_form_sup(problem, k))


@pytest.mark.parametrize("ratio, k", [(0.8, 0), (1.5, 1), (0.6, 2)])
def test_exponent_sup_vertex_should_raise_when_ratio_is_outside_region(ratio, k):
    # Arrange
    problem = ExponentProblem(m=3, n=3, ratio=ratio)

    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        exponent_sup_vertex(problem, k)


def test_closed_form_sup_should_raise_when_epsilon_pushes_ratio_out_of_region():
    # Arrange
    problem = ExponentProblem(m=2, n=2, ratio=1.05, epsilon=0.1)

    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        closed_form_sup(problem, 0)


def test_exponent_sup_oracle_should_raise_when_grid_dimension_is_too_large():
    # Arrange
    problem = ExponentProblem(m=4, n=4, ratio=0.3)

    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        exponent_sup_oracle(problem, 3)
