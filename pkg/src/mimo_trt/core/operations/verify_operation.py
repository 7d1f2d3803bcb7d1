"""Self-checks of the analytic identities, the exponent oracle and the Monte-Carlo engine."""

import math

from loguru import logger

from mimo_trt.core.analysis import gamma_exact, gamma_rho_for_level, siso_exact, siso_rho_for_level
from mimo_trt.core.simulation import MonteCarloEngine
from mimo_trt.core.snr import snr_linear_to_db
from mimo_trt.core.tradeoff import (
    closed_form_sup,
    exponent_sup_oracle,
    exponent_sup_vertex,
    identity_check,
)
from mimo_trt.entities.channel import ChannelSpec
from mimo_trt.entities.estimate import SamplingPolicy
from mimo_trt.entities.report import CheckResult, VerificationReport, VerifyOracle
from mimo_trt.entities.scheme import ALAMOUTI, MimoOptimal, Scheme
from mimo_trt.entities.tradeoff import ExponentProblem

IDENTITY_MAX_ANTENNAS = 8
EXPONENT_MAX_ANTENNAS = 3
EXPONENT_TOLERANCE = 0.02
RATIOS_PER_REGION = 5
K0_RATIOS = (1.25, 1.5, 2.0, 3.0, 5.0)

SISO_RATE = 2.0
SISO_LEVELS = (1e-1, 1e-2, 1e-3)
GAMMA_RATE = 4.0
GAMMA_LEVELS = (1e-2, 1e-3)
MC_RUNS = 10
MC_TARGET_HITS = 500
MC_MAX_SAMPLES = 4_000_000
MC_HALF_WIDTHS = 3.0
MC_COVERAGE = 0.9


def exponent_ratios(k: int) -> tuple[float, ...]:
    """Interior points of region k in log2(rho) / R: (1/(k+1), 1/k), or (1, inf) for k = 0."""
    if k == 0:
        return K0_RATIOS
    low, high = 1.0 / (k + 1), 1.0 / k
    step = (high - low) / (RATIOS_PER_REGION + 1)
    return tuple(low + j * step for j in range(1, RATIOS_PER_REGION + 1))


class VerifyOperation:
    def __init__(self, engine: MonteCarloEngine):
        self.engine = engine

    def execute(
        self, oracle: VerifyOracle, seed: int = 0, runs: int = MC_RUNS
    ) -> VerificationReport:
        match oracle:
            case VerifyOracle.IDENTITIES:
                checks = self._identities()
            case VerifyOracle.EXPONENT:
                checks = self._exponent()
            case VerifyOracle.SISO:
                checks = self._siso(seed, runs)
            case VerifyOracle.GAMMA:
                checks = self._gamma(seed, runs)
        report = VerificationReport(oracle=oracle, checks=tuple(checks))
        logger.info(
            "verify {}: {}/{} checks passed",
            oracle.value,
            sum(check.passed for check in report.checks),
            len(report.checks),
        )
        return report

    def _identities(self) -> list[CheckResult]:
        checks = []
        for m in range(1, IDENTITY_MAX_ANTENNAS + 1):
            for n in range(1, IDENTITY_MAX_ANTENNAS + 1):
                passed = identity_check(m, n)
                checks.append(
                    CheckResult(f"identities {m}x{n}", passed, float(passed), 1.0, 0.0)
                )
        return checks

    def _exponent(self) -> list[CheckResult]:
        checks = []
        for m in range(1, EXPONENT_MAX_ANTENNAS + 1):
            for n in range(1, EXPONENT_MAX_ANTENNAS + 1):
                for k in range(min(m, n)):
                    for ratio in exponent_ratios(k):
                        problem = ExponentProblem(m=m, n=n, ratio=ratio)
                        expected = closed_form_sup(problem, k)
                        measured = exponent_sup_oracle(problem, k)
                        vertex = exponent_sup_vertex(problem, k)
                        passed = (
                            abs(measured - expected) <= EXPONENT_TOLERANCE
                            and abs(vertex - expected) <= 1e-9
                        )
                        checks.append(
                            CheckResult(
                                f"exponent {m}x{n} k={k} ratio={ratio:.4g}",
                                passed,
                                measured,
                                expected,
                                EXPONENT_TOLERANCE,
                                detail=f"vertex={vertex:.6g}",
                            )
                        )
        return checks

    def _siso(self, seed: int, runs: int) -> list[CheckResult]:
        spec = ChannelSpec(m=1, n=1)
        checks = []
        for level in SISO_LEVELS:
            rho = siso_rho_for_level(SISO_RATE, level)
            exact = siso_exact(SISO_RATE, rho)
            checks.append(
                self._coverage_check(
                    f"siso p={level:g}", MimoOptimal(), spec, SISO_RATE, rho, exact, seed, runs
                )
            )
        return checks

    def _gamma(self, seed: int, runs: int) -> list[CheckResult]:
        spec = ChannelSpec(m=2, n=2)
        degrees = spec.m * spec.n
        effective_rate = GAMMA_RATE / float(ALAMOUTI.code_rate)
        checks = []
        for level in GAMMA_LEVELS:
            rho = gamma_rho_for_level(degrees, effective_rate, spec.m, level)
            exact = gamma_exact(degrees, effective_rate, rho, spec.m)
            checks.append(
                self._coverage_check(
                    f"alamouti p={level:g}", ALAMOUTI, spec, GAMMA_RATE, rho, exact, seed, runs
                )
            )
        return checks

    def _coverage_check(
        self,
        name: str,
        scheme: Scheme,
        spec: ChannelSpec,
        rate: float,
        rho: float,
        exact: float,
        seed: int,
        runs: int,
    ) -> CheckResult:
        """Share of seeded runs whose estimate lies within 3 Wilson half-widths of `exact`."""
        policy = SamplingPolicy(max_samples=MC_MAX_SAMPLES, target_hits=MC_TARGET_HITS)
        snr_db = snr_linear_to_db(rho)
        covered = 0
        estimates = []
        worst = 0.0
        for run in range(runs):
            estimate = self.engine.estimate_outage(scheme, spec, rate, snr_db, policy, seed + run)
            estimates.append(estimate.p_hat)
            error = abs(estimate.p_hat - exact)
            if error <= MC_HALF_WIDTHS * estimate.half_width:
                covered += 1
            if estimate.half_width > 0:
                worst = max(worst, error / estimate.half_width)
        mean = math.fsum(estimates) / runs
        return CheckResult(
            name=name,
            passed=covered >= math.floor(MC_COVERAGE * runs),
            measured=mean,
            expected=exact,
            tolerance=MC_HALF_WIDTHS,
            detail=(
                f"{covered}/{runs} runs within {MC_HALF_WIDTHS:g} half-widths, "
                f"worst {worst:.2f}"
            ),
        )
