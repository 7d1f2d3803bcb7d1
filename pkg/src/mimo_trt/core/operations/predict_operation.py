from mimo_trt.core.snr import snr_db_to_linear
from mimo_trt.core.tradeoff import (
    locate_scheme_region,
    predict_log2_po,
    predicted_slope_per_decade,
    predicted_spacing_db,
    region_label,
    scheme_coefficients,
    scheme_region_rate,
    scheme_regions,
)
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.report import (
    PointPrediction,
    PredictedSpacing,
    PredictionReport,
    RegionPrediction,
)
from mimo_trt.entities.scheme import Scheme, check_scheme_for_spec
from mimo_trt.entities.tradeoff import RegionKind, RegionLabel


def point_region_label(m: int, n: int, R: float, snr_db: float, delta: float) -> RegionLabel:
    """Rule-of-thumb region of a point; SNRs at or below 0 dB are degenerate for every rate."""
    return region_label(m, n, R, snr_db_to_linear(snr_db), delta)


class PredictOperation:
    """Analytic prediction: coefficients, regions, slopes and spacings of one scheme."""

    def execute(
        self,
        scheme: Scheme,
        m: int,
        n: int,
        k: int | None = None,
        delta_rs: tuple[float, ...] = (),
        rate: float | None = None,
        snr_db: float | None = None,
        delta: float = 0.1,
    ) -> PredictionReport:
        check_scheme_for_spec(scheme, m, n)
        if (rate is None) != (snr_db is None):
            raise InvalidArgumentError("rate and snr_db must be given together")

        indices = [k] if k is not None else [region.k for region in scheme_regions(scheme, m, n)]
        regions = []
        for index in indices:
            tradeoff = scheme_coefficients(scheme, m, n, index)
            spacings = tuple(
                PredictedSpacing(delta_r, predicted_spacing_db(tradeoff.coefficients, delta_r))
                for delta_r in delta_rs
            )
            regions.append(
                RegionPrediction(
                    tradeoff=tradeoff,
                    slope_per_decade=predicted_slope_per_decade(tradeoff.coefficients),
                    spacings=spacings,
                )
            )

        point = None
        if rate is not None and snr_db is not None:
            point = self._predict_point(scheme, m, n, rate, snr_db, delta)
        return PredictionReport(scheme=scheme.tag, m=m, n=n, regions=tuple(regions), point=point)

    def _predict_point(
        self, scheme: Scheme, m: int, n: int, rate: float, snr_db: float, delta: float
    ) -> PointPrediction:
        if not rate > 0.0:
            raise InvalidArgumentError(f"rate must be positive, got {rate}")
        if not 0.0 < delta < 1.0:
            raise InvalidArgumentError(f"delta must be in (0, 1), got {delta}")
        rho = snr_db_to_linear(snr_db)
        region_rate = scheme_region_rate(scheme, rate)
        region = point_region_label(m, n, region_rate, snr_db, delta)
        exact = region_label(m, n, region_rate, rho, delta, exact=True)
        located = locate_scheme_region(scheme, m, n, rate, rho) if rho > 1.0 else None
        log2_po = None
        if located is not None:
            log2_po = predict_log2_po(m, n, rate, rho, located, scheme=scheme)
        elif exact.kind is RegionKind.DEGENERATE:
            log2_po = predict_log2_po(m, n, rate, rho, 0, scheme=scheme)
        return PointPrediction(
            rate_bpcu=rate,
            snr_db=snr_db,
            region=region,
            exact_region=exact,
            scheme_region=located,
            log2_po=log2_po,
        )
