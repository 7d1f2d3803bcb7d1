import math

import pytest

from mimo_trt.core.snr import snr_db_to_linear
from mimo_trt.core.tradeoff import classify_region, exact_region
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.tradeoff import RegionKind


def test_classify_region_should_find_first_region_when_both_ratios_are_small():
    # Act
    label = classify_region(2, 2, 4.0, 1000.0, 0.1)

    # Assert
    assert (label.kind, label.k) == (RegionKind.IN_REGION, 0)


def test_classify_region_should_report_transitional_when_rate_is_near_region_boundary():
    # Act
    label = classify_region(2, 2, 20.0, snr_db_to_linear(31.0), 0.1)

    # Assert
    assert label.kind is RegionKind.TRANSITIONAL


def test_classify_region_should_report_degenerate_when_rate_exceeds_every_region():
    # Act
    label = classify_region(2, 2, 25.0, 1000.0, 0.1)

    # Assert
    assert label.kind is RegionKind.DEGENERATE


def test_classify_region_should_report_degenerate_just_past_full_multiplexing():
    # Act
    label = classify_region(2, 2, 20.0, 1000.0, 0.1)

    # Assert
    assert label.kind is RegionKind.DEGENERATE


def test_classify_region_should_handle_rates_whose_powers_overflow_floats():
    # Act
    label = classify_region(4, 4, 1500.0, 10.0**300, 0.1)

    # Assert
    assert (label.kind, label.k) == (RegionKind.IN_REGION, 1)


@pytest.mark.parametrize("delta", [0.0, 1.0, 1.5, -0.1])
def test_classify_region_should_raise_when_delta_is_outside_unit_interval(delta):
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        classify_region(2, 2, 4.0, 1000.0, delta)


@pytest.mark.parametrize("rate, rho", [(0.0, 1000.0), (-1.0, 1000.0), (4.0, 1.0), (4.0, 0.5)])
def test_classify_region_should_raise_when_point_is_invalid(rate, rho):
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        classify_region(2, 2, rate, rho, 0.1)


@pytest.mark.parametrize("delta", [0.01, 0.1, 0.5, 0.99])
def test_classify_region_should_never_match_two_regions(delta):
    # Arrange
    log2_delta = math.log2(delta)

    for snr_db in range(1, 121, 3):
        for rate in (0.5, 2.0, 7.0, 15.0, 30.0, 60.0):
            rho = snr_db_to_linear(float(snr_db))
            log2_rho = math.log2(rho)

            # Act
            matches = [
                k
                for k in range(3)
                if k * log2_rho - rate <= log2_delta and rate - (k + 1) * log2_rho <= log2_delta
            ]
            label = classify_region(3, 3, rate, rho, delta)

            # Assert
            assert len(matches) <= 1
            if label.kind is RegionKind.IN_REGION:
                assert matches == [label.k]


@pytest.mark.parametrize(
    "rate, log2_rho, kind, k",
    [
        (4.0, 10.0, RegionKind.IN_REGION, 0),
        (15.0, 10.0, RegionKind.IN_REGION, 1),
        (10.0, 10.0, RegionKind.TRANSITIONAL, None),
        (20.0, 10.0, RegionKind.TRANSITIONAL, None),
        (21.0, 10.0, RegionKind.DEGENERATE, None),
    ],
)
def test_exact_region_should_locate_ratio_between_integers(rate, log2_rho, kind, k):
    # Act
    label = exact_region(2, 2, rate, 2.0**log2_rho)

    # Assert
    assert (label.kind, label.k) == (kind, k)
    assert label.delta == 0.0
