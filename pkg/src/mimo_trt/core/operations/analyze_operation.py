"""Measured slopes and spacings of result tables, set against the analytic predictions."""

from collections import defaultdict
from itertools import pairwise

from loguru import logger

from mimo_trt.core.analysis import (
    DEFAULT_WINDOW_DB,
    centred_window,
    deepest_window,
    local_slope,
    make_curve_point,
    snr_at_level,
    spacing_at_level,
)
from mimo_trt.core.snr import snr_db_to_linear
from mimo_trt.core.tradeoff import (
    locate_scheme_region,
    predicted_slope_per_decade,
    predicted_spacing_db,
    scheme_coefficients,
)
from mimo_trt.entities.curve import CurvePoint
from mimo_trt.entities.errors import InsufficientDataError, InvalidArgumentError
from mimo_trt.entities.report import (
    AnalysisReport,
    CurveFamilyAnalysis,
    SlopeComparison,
    SpacingComparison,
)
from mimo_trt.entities.result import ResultRow
from mimo_trt.entities.scheme import Scheme, parse_scheme_tag
from mimo_trt.entities.tradeoff import TrtCoefficients


def _curve_points(rows: list[ResultRow]) -> list[CurvePoint]:
    points = []
    for row in rows:
        point = make_curve_point(row.snr_db, row.p_outage, row.ci_lo, row.ci_hi, row.hits)
        if row.flagged and not point.flagged:
            point = CurvePoint(point.snr_db, point.log10_p, point.weight, flagged=True)
        points.append(point)
    return sorted(points, key=lambda point: point.snr_db)


def _coefficients_at(
    scheme: Scheme, m: int, n: int, rate: float, snr_db: float
) -> TrtCoefficients | None:
    rho = snr_db_to_linear(snr_db)
    if rho <= 1.0:
        return None
    k = locate_scheme_region(scheme, m, n, rate, rho)
    if k is None:
        return None
    return scheme_coefficients(scheme, m, n, k).coefficients


class AnalyzeOperation:
    def execute(
        self,
        rows: list[ResultRow],
        levels: tuple[float, ...] = (),
        slope_window_db: float = DEFAULT_WINDOW_DB,
        slope_centre_db: float | None = None,
    ) -> AnalysisReport:
        """Analyze every (scheme, m, n) family of curves found in `rows`.

        Slopes use a window of `slope_window_db` centred on `slope_centre_db`,
        or ending at each curve's deepest unflagged point. Spacings are taken
        between rate-adjacent curves at each requested level.

        Raises:
            InsufficientDataError: the table is empty, or spacings were requested
                but no family has two curves.
        """
        if not rows:
            raise InsufficientDataError("result table has no rows")
        if slope_window_db <= 0:
            raise InvalidArgumentError(f"slope window must be positive, got {slope_window_db}")

        families: dict[tuple[str, int, int], dict[float, list[ResultRow]]] = defaultdict(
            lambda: defaultdict(list)
        )
        for row in rows:
            families[(row.scheme, row.m, row.n)][row.rate_bpcu].append(row)

        if levels and all(len(curves) < 2 for curves in families.values()):
            raise InsufficientDataError("spacings need at least two curves of the same family")

        return AnalysisReport(
            families=tuple(
                self._analyze_family(tag, m, n, curves, levels, slope_window_db, slope_centre_db)
                for (tag, m, n), curves in families.items()
            )
        )

    def _analyze_family(
        self,
        tag: str,
        m: int,
        n: int,
        curves: dict[float, list[ResultRow]],
        levels: tuple[float, ...],
        slope_window_db: float,
        slope_centre_db: float | None,
    ) -> CurveFamilyAnalysis:
        scheme = parse_scheme_tag(tag)
        points = {rate: _curve_points(curve) for rate, curve in sorted(curves.items())}

        slopes = []
        for rate, curve in points.items():
            try:
                window = (
                    centred_window(slope_centre_db, slope_window_db)
                    if slope_centre_db is not None
                    else deepest_window(curve, slope_window_db)
                )
                measured = local_slope(curve, window)
            except InsufficientDataError as e:
                logger.warning("No slope for {} R={}: {}", tag, rate, e)
                slopes.append(SlopeComparison(rate, None, None, note=str(e)))
                continue
            centre = sum(measured.snr_window_db) / 2.0
            coefficients = _coefficients_at(scheme, m, n, rate, centre)
            predicted = (
                predicted_slope_per_decade(coefficients) if coefficients is not None else None
            )
            slopes.append(SlopeComparison(rate, measured, predicted))

        spacings = []
        for level in levels:
            for (rate_a, curve_a), (rate_b, curve_b) in pairwise(points.items()):
                try:
                    measured_spacing = spacing_at_level(curve_a, curve_b, level, (rate_a, rate_b))
                except InsufficientDataError as e:
                    spacings.append(SpacingComparison((rate_a, rate_b), level, None, None, str(e)))
                    continue
                coefficients = _coefficients_at(
                    scheme, m, n, rate_a, snr_at_level(curve_a, level)
                )
                predicted_db = (
                    predicted_spacing_db(coefficients, rate_b - rate_a)
                    if coefficients is not None
                    else None
                )
                spacings.append(
                    SpacingComparison((rate_a, rate_b), level, measured_spacing, predicted_db)
                )

        return CurveFamilyAnalysis(
            scheme=tag, m=m, n=n, slopes=tuple(slopes), spacings=tuple(spacings)
        )
