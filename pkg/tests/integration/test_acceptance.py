"""Monte-Carlo reproductions of the reference outage curves; run with `pytest -m slow`."""

import math

import pytest

from mimo_trt.app.config import load_app_config
from mimo_trt.core.analysis import (
    gamma_exact,
    gamma_rho_for_level,
    local_slope,
    region_transitions,
    spacing_at_level,
    to_curve_points,
)
from mimo_trt.core.operations import AnalyzeOperation, SimulateOperation, VerifyOperation
from mimo_trt.core.simulation import MonteCarloEngine
from mimo_trt.core.snr import snr_db_to_linear, snr_linear_to_db
from mimo_trt.entities.channel import ChannelSpec
from mimo_trt.entities.estimate import SamplingPolicy
from mimo_trt.entities.report import VerifyOracle
from mimo_trt.entities.result import ResultFormat
from mimo_trt.entities.scheme import ALAMOUTI, ArqLongTermStatic, MimoOptimal, VblastMl
from mimo_trt.entities.sweep import SweepConfig, inclusive_grid
from mimo_trt.libs.csv_result_store import CsvResultStore

pytestmark = pytest.mark.slow

SPEC_2X2 = ChannelSpec(m=2, n=2)
ENGINE = MonteCarloEngine(threads=4)

REGION_ZERO_SWEEP = SweepConfig(
    m=2,
    n=2,
    rates=[4.0, 8.0],
    snr_start_db=10.0,
    snr_stop_db=34.0,
    snr_step_db=2.0,
    max_samples=8_000_000,
    target_hits=500,
    seed=1,
)


def _window_within(points, low_p: float, high_p: float) -> tuple[float, float]:
    inside = [
        point.snr_db
        for point in points
        if not point.flagged and math.log10(low_p) <= point.log10_p <= math.log10(high_p)
    ]
    return min(inside), max(inside)


def test_siso_estimates_should_cover_closed_form():
    # Act
    report = VerifyOperation(ENGINE).execute(VerifyOracle.SISO, seed=0, runs=10)

    # Assert
    assert report.passed


def test_alamouti_estimates_should_cover_gamma_closed_form():
    # Act
    report = VerifyOperation(ENGINE).execute(VerifyOracle.GAMMA, seed=0, runs=10)

    # Assert
    assert report.passed


def test_first_region_curves_should_be_nine_db_apart_for_four_extra_bits():
    # Arrange
    store = CsvResultStore()
    rows = SimulateOperation(ENGINE, store).execute(REGION_ZERO_SWEEP)

    # Act
    report = AnalyzeOperation().execute(rows, levels=(1e-3,))

    # Assert
    (family,) = report.families
    low_rate_slope = family.slopes[0]
    assert low_rate_slope.rate_bpcu == 4.0
    assert low_rate_slope.measured.slope_per_decade >= 3.2
    (spacing,) = family.spacings
    assert spacing.measured.spacing_db == pytest.approx(9.03, abs=1.0)
    assert spacing.predicted_db == pytest.approx(9.03, abs=0.01)


def test_second_region_curves_should_be_three_db_apart_for_two_extra_bits():
    # Arrange
    policy = SamplingPolicy(max_samples=4_000_000, target_hits=400)
    grid = inclusive_grid(40.0, 76.0, 2.0)

    # Act
    curves = [
        to_curve_points(ENGINE.sweep(MimoOptimal(), SPEC_2X2, [rate], grid, policy, seed=2))
        for rate in (28.0, 32.0)
    ]

    # Assert
    spacing = spacing_at_level(curves[0], curves[1], 1e-2)
    assert spacing.spacing_db == pytest.approx(3.01, abs=0.5)
    for points in curves:
        slope = local_slope(points, _window_within(points, 1e-4, 1e-2))
        assert slope.slope_per_decade == pytest.approx(2.0, abs=0.3)


def test_vblast_curves_should_show_two_levels_of_diversity_six_db_apart():
    # Arrange
    policy = SamplingPolicy(max_samples=4_000_000, target_hits=400)
    grid = inclusive_grid(14.0, 46.0, 2.0)

    # Act
    curves = [
        to_curve_points(ENGINE.sweep(VblastMl(), SPEC_2X2, [rate], grid, policy, seed=3))
        for rate in (8.0, 12.0)
    ]

    # Assert
    slope = local_slope(curves[0], _window_within(curves[0], 1e-5, 1e-2))
    assert slope.slope_per_decade == pytest.approx(2.0, abs=0.3)
    spacing = spacing_at_level(curves[0], curves[1], 1e-3)
    assert spacing.spacing_db == pytest.approx(6.02, abs=1.0)


def test_alamouti_curves_should_show_full_diversity_twelve_db_apart():
    # Arrange
    policy = SamplingPolicy(max_samples=4_000_000, target_hits=300)
    rates = (4.0, 8.0)

    def snr_for(rate: float, level: float) -> float:
        return snr_linear_to_db(gamma_rho_for_level(4, rate, 2, level))

    estimates = []
    for rate in rates:
        grid = inclusive_grid(
            math.floor(snr_for(rate, 1e-2)), math.ceil(snr_for(rate, 1e-5)), 1.0
        )

        # Act
        estimates.append(ENGINE.sweep(ALAMOUTI, SPEC_2X2, [rate], grid, policy, seed=4))

    # Assert
    curves = [to_curve_points(curve) for curve in estimates]
    centre = snr_for(4.0, 1e-4)
    slope = local_slope(curves[0], (centre - 3.0, centre + 3.0))
    assert slope.slope_per_decade == pytest.approx(4.0, abs=0.5)
    spacing = spacing_at_level(curves[0], curves[1], 1e-3)
    assert spacing.spacing_db == pytest.approx(12.04, abs=1.0)
    for curve, rate in zip(estimates, rates, strict=True):
        for estimate in curve:
            if estimate.hits == 0:
                continue
            exact = gamma_exact(4, rate, snr_db_to_linear(estimate.snr_db), 2)
            assert abs(estimate.p_hat - exact) <= 3.0 * estimate.half_width


def test_arq_error_curves_should_follow_long_term_static_tradeoff():
    # Arrange
    scheme = ArqLongTermStatic(2)
    policy = SamplingPolicy(max_samples=4_000_000, target_hits=400)
    grid = inclusive_grid(4.0, 40.0, 2.0)

    # Act
    curves = [
        ENGINE.sweep_arq(SPEC_2X2, scheme, [r1], grid, policy, seed=5) for r1 in (4.0, 8.0)
    ]

    # Assert
    points = [to_curve_points(curve) for curve in curves]
    slope = local_slope(points[0], _window_within(points[0], 1e-5, 1e-2))
    assert slope.slope_per_decade == pytest.approx(4.0, abs=0.5)
    spacing = spacing_at_level(points[0], points[1], 1e-3)
    assert spacing.spacing_db == pytest.approx(4.52, abs=1.0)

    reliable = min(estimate.snr_db for estimate in curves[0] if estimate.p_err <= 1e-3)
    for estimate in curves[0]:
        assert estimate.eta <= estimate.r1_bpcu
        if estimate.snr_db >= reliable + 6.0:
            assert estimate.eta / estimate.r1_bpcu >= 0.99
            assert estimate.mean_rounds <= 1.01


def test_constant_rate_trajectory_should_cross_second_then_first_region():
    # Act
    changes = region_transitions(2, 2, 20.0, inclusive_grid(20.0, 80.0, 0.5), 0.1)

    # Assert
    assert [label.label for _, label in changes] == [
        "degenerate",
        "transitional",
        "1",
        "transitional",
        "0",
    ]


def test_first_region_sweep_should_be_byte_identical_for_any_thread_count(monkeypatch):
    # Arrange
    store = CsvResultStore()
    outputs = []

    for threads in ("1", "4", "8"):
        monkeypatch.setenv("TRT_THREADS", threads)
        engine = MonteCarloEngine(threads=load_app_config().threads)

        # Act
        rows = SimulateOperation(engine, store).execute(REGION_ZERO_SWEEP)
        outputs.append(store.serialize(rows, ResultFormat.CSV))

    # Assert
    assert outputs[0] == outputs[1] == outputs[2]
