import math

import pytest

from mimo_trt.core.analysis import gamma_exact, gamma_rho_for_level, siso_exact, siso_rho_for_level
from mimo_trt.entities.errors import InvalidArgumentError


@pytest.mark.parametrize("rate, rho, expected", [(1.0, 1.0, 0.63212), (2.0, 10.0, 0.25918)])
def test_siso_exact_should_match_exponential_distribution(rate, rho, expected):
    # Act / Assert
    assert siso_exact(rate, rho) == pytest.approx(expected, abs=1e-5)


def test_siso_exact_should_vanish_when_snr_grows():
    # Act / Assert
    assert siso_exact(2.0, 1e12) < 1e-11


@pytest.mark.parametrize("rate, rho", [(0.5, 3.0), (4.0, 1000.0), (8.0, 1e5)])
def test_gamma_exact_should_equal_siso_when_single_branch(rate, rho):
    # Act / Assert
    assert gamma_exact(1, rate, rho, 1) == pytest.approx(siso_exact(rate, rho), rel=1e-12)


def test_gamma_exact_should_match_finite_series():
    # Arrange
    x = 2 * 15.0 / 10**1.5
    expected = 1.0 - math.exp(-x) * sum(x**j / math.factorial(j) for j in range(4))

    # Act / Assert
    assert gamma_exact(4, 4.0, 10**1.5, 2) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("branches", [1, 2, 4, 9])
def test_gamma_exact_should_follow_leading_order_when_argument_is_small(branches):
    # Arrange
    x = 1e-3
    rho = (2.0**3 - 1.0) / x

    # Act
    probability = gamma_exact(branches, 3.0, rho, 1)

    # Assert
    assert probability / (x**branches / math.factorial(branches)) == pytest.approx(1.0, rel=0.01)


@pytest.mark.parametrize("level", [1e-1, 1e-2, 1e-3])
def test_siso_rho_for_level_should_invert_closed_form(level):
    # Act
    rho = siso_rho_for_level(2.0, level)

    # Assert
    assert siso_exact(2.0, rho) == pytest.approx(level, rel=1e-9)


@pytest.mark.parametrize("level", [1e-2, 1e-3])
def test_gamma_rho_for_level_should_invert_closed_form(level):
    # Act
    rho = gamma_rho_for_level(4, 4.0, 2, level)

    # Assert
    assert gamma_exact(4, 4.0, rho, 2) == pytest.approx(level, rel=1e-6)


def test_gamma_exact_should_raise_when_branch_count_is_zero():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        gamma_exact(0, 1.0, 10.0, 1)


def test_siso_rho_for_level_should_raise_when_level_is_not_a_probability():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        siso_rho_for_level(2.0, 1.0)
