from pathlib import Path

from loguru import logger

from mimo_trt.core.analysis import make_curve_point
from mimo_trt.core.interfaces.result_store import ResultStore
from mimo_trt.core.operations.predict_operation import point_region_label
from mimo_trt.core.simulation import MonteCarloEngine
from mimo_trt.core.tradeoff import scheme_region_rate
from mimo_trt.entities.channel import ChannelSpec
from mimo_trt.entities.estimate import ArqEstimate, OutageEstimate
from mimo_trt.entities.result import ArqColumns, ResultFormat, ResultRow
from mimo_trt.entities.scheme import ArqLongTermStatic
from mimo_trt.entities.sweep import SweepConfig


class SimulateOperation:
    """Runs a sweep and turns every estimate into a result row with its region and flag."""

    def __init__(self, engine: MonteCarloEngine, result_store: ResultStore):
        self.engine = engine
        self.result_store = result_store

    def execute(self, config: SweepConfig) -> list[ResultRow]:
        scheme = config.build_scheme()
        spec = ChannelSpec(m=config.m, n=config.n)
        grid = config.snr_grid_db()
        logger.info(
            "Simulating {} on {}x{}: {} rates x {} SNR points, seed {}",
            scheme.tag,
            spec.m,
            spec.n,
            len(config.rates),
            len(grid),
            config.seed,
        )

        if isinstance(scheme, ArqLongTermStatic):
            arq_estimates = self.engine.sweep_arq(
                spec, scheme, config.rates, grid, config.policy(), config.seed
            )
            return [self._arq_row(estimate, scheme, config.delta) for estimate in arq_estimates]

        estimates = self.engine.sweep(
            scheme, spec, config.rates, grid, config.policy(), config.seed
        )
        return [self._outage_row(estimate, config.delta) for estimate in estimates]

    def write(self, rows: list[ResultRow], out: Path | None, fmt: ResultFormat) -> str | None:
        """Write rows to `out`, or return their text when no path is given."""
        if out is None:
            return self.result_store.serialize(rows, fmt)
        self.result_store.write_rows(rows, out, fmt)
        logger.info("Wrote {} rows to {}", len(rows), out)
        return None

    def _outage_row(self, estimate: OutageEstimate, delta: float) -> ResultRow:
        point = make_curve_point(
            estimate.snr_db, estimate.p_hat, estimate.ci_low, estimate.ci_high, estimate.hits
        )
        region = point_region_label(
            estimate.m, estimate.n, estimate.rate_bpcu, estimate.snr_db, delta
        )
        return ResultRow(
            scheme=estimate.scheme,
            m=estimate.m,
            n=estimate.n,
            rate_bpcu=estimate.rate_bpcu,
            snr_db=estimate.snr_db,
            p_outage=estimate.p_hat,
            ci_lo=estimate.ci_low,
            ci_hi=estimate.ci_high,
            samples=estimate.samples,
            hits=estimate.hits,
            region=region.label,
            flagged=point.flagged,
        )

    def _arq_row(self, estimate: ArqEstimate, scheme: ArqLongTermStatic, delta: float) -> ResultRow:
        """ARQ rows report p_err as the outage column; the region is that of R1 / L."""
        point = make_curve_point(
            estimate.snr_db, estimate.p_err, estimate.ci_low, estimate.ci_high, estimate.failures
        )
        region_rate = scheme_region_rate(scheme, estimate.r1_bpcu)
        region = point_region_label(estimate.m, estimate.n, region_rate, estimate.snr_db, delta)
        return ResultRow(
            scheme=estimate.scheme,
            m=estimate.m,
            n=estimate.n,
            rate_bpcu=estimate.r1_bpcu,
            snr_db=estimate.snr_db,
            p_outage=estimate.p_err,
            ci_lo=estimate.ci_low,
            ci_hi=estimate.ci_high,
            samples=estimate.samples,
            hits=estimate.failures,
            region=region.label,
            flagged=point.flagged,
            arq=ArqColumns(
                eta=estimate.eta, p_err=estimate.p_err, mean_rounds=estimate.mean_rounds
            ),
        )
