"""Adaptive Monte-Carlo estimation of outage probabilities and ARQ metrics.

Realizations are drawn in blocks of BLOCK_SIZE. Block b of a point always
uses the counter-based sub-stream (seed, stream_index, b), and the stopping
rule is applied to the prefix sums of the blocks in index order, so the
result does not depend on how many worker threads evaluated the blocks.
"""

import math
from collections import defaultdict
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from loguru import logger

from mimo_trt.core.channels import arq_rounds, outage_batch
from mimo_trt.core.linalg import mutual_info_bits_batch, sample_channels
from mimo_trt.core.simulation.confidence import binomial_interval, wilson_interval
from mimo_trt.core.simulation.streams import point_stream_index
from mimo_trt.core.snr import snr_db_to_linear
from mimo_trt.entities.channel import ChannelSpec, RngStream
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.estimate import ArqEstimate, OutageEstimate, SamplingPolicy
from mimo_trt.entities.scheme import ArqLongTermStatic, Scheme, check_scheme_for_spec

BLOCK_SIZE = 8192
MONOTONICITY_SIGMAS = 3.0


@dataclass(frozen=True)
class BlockTally:
    samples: int
    hits: int
    rounds: int = 0

    def __add__(self, other: "BlockTally") -> "BlockTally":
        return BlockTally(
            self.samples + other.samples, self.hits + other.hits, self.rounds + other.rounds
        )


BlockEvaluator = Callable[[np.random.Generator, int], BlockTally]


def _check_point(rate: float, snr_db: float) -> None:
    if not rate > 0.0:
        raise InvalidArgumentError(f"rate must be positive, got {rate}")
    if not math.isfinite(snr_db):
        raise InvalidArgumentError(f"snr_db must be finite, got {snr_db}")


def _block_sizes(max_samples: int) -> list[int]:
    count = -(-max_samples // BLOCK_SIZE)
    return [min(BLOCK_SIZE, max_samples - b * BLOCK_SIZE) for b in range(count)]


class MonteCarloEngine:
    """Runs outage and ARQ estimates, spreading sample blocks over `threads` workers."""

    def __init__(self, threads: int = 1):
        if threads < 1:
            raise InvalidArgumentError(f"threads must be >= 1, got {threads}")
        self.threads = threads

    def _accumulate(
        self, stream: RngStream, policy: SamplingPolicy, evaluate: BlockEvaluator
    ) -> tuple[BlockTally, int]:
        """Sum block tallies in block order until the hit target or the sample cap is reached.

        Blocks are scheduled in waves of `threads`; a wave may compute blocks
        past the stopping point, which are discarded.
        """
        sizes = _block_sizes(policy.max_samples)
        total = BlockTally(0, 0)
        used = 0

        def run(index: int) -> BlockTally:
            return evaluate(stream.generator(index), sizes[index])

        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            while used < len(sizes):
                wave = range(used, min(used + self.threads, len(sizes)))
                if self.threads == 1:
                    tallies = [run(index) for index in wave]
                else:
                    tallies = list(pool.map(run, wave))
                for tally in tallies:
                    total += tally
                    used += 1
                    if total.hits >= policy.target_hits:
                        return total, used
        return total, used

    def estimate_outage(
        self,
        scheme: Scheme,
        spec: ChannelSpec,
        rate: float,
        snr_db: float,
        policy: SamplingPolicy,
        seed: int,
    ) -> OutageEstimate:
        """Estimate P_o(rate, snr_db) of `scheme`, stopping adaptively per `policy`.

        Raises:
            InvalidArgumentError: non-positive rate, non-finite SNR or a scheme
                not supported by `spec`.
        """
        _check_point(rate, snr_db)
        check_scheme_for_spec(scheme, spec.m, spec.n)
        rho = snr_db_to_linear(snr_db)
        stream = RngStream(seed, point_stream_index(rate, snr_db))

        def evaluate(rng: np.random.Generator, size: int) -> BlockTally:
            channels = sample_channels(rng, spec.n, spec.m, size)
            outage = outage_batch(scheme, channels, spec, rho, rate)
            return BlockTally(size, int(np.count_nonzero(outage)))

        tally, blocks = self._accumulate(stream, policy, evaluate)
        ci_low, ci_high, upper_bound_only = binomial_interval(
            tally.hits, tally.samples, policy.ci_confidence
        )
        logger.debug(
            "{} {}x{} R={} at {} dB: {} hits in {} samples over {} blocks",
            scheme.tag,
            spec.m,
            spec.n,
            rate,
            snr_db,
            tally.hits,
            tally.samples,
            blocks,
        )
        if upper_bound_only:
            logger.warning(
                "No outage observed for {} R={} at {} dB in {} samples; reporting P_o <= {:.3g}",
                scheme.tag,
                rate,
                snr_db,
                tally.samples,
                ci_high,
            )
        return OutageEstimate(
            scheme=scheme.tag,
            m=spec.m,
            n=spec.n,
            rate_bpcu=rate,
            snr_db=snr_db,
            p_hat=tally.hits / tally.samples,
            ci_low=ci_low,
            ci_high=ci_high,
            samples=tally.samples,
            hits=tally.hits,
            seed=seed,
            upper_bound_only=upper_bound_only,
        )

    def sweep(
        self,
        scheme: Scheme,
        spec: ChannelSpec,
        rates: list[float],
        snr_grid_db: list[float],
        policy: SamplingPolicy,
        seed: int,
    ) -> list[OutageEstimate]:
        """One estimate per (rate, SNR) pair, rate-major; monotonicity violations are logged."""
        if not rates:
            raise InvalidArgumentError("rates must not be empty")
        if not snr_grid_db:
            raise InvalidArgumentError("snr grid must not be empty")

        estimates = []
        total = len(rates) * len(snr_grid_db)
        for rate in rates:
            for snr_db in snr_grid_db:
                estimate = self.estimate_outage(scheme, spec, rate, snr_db, policy, seed)
                estimates.append(estimate)
                logger.info(
                    "[{}/{}] {} R={} {} dB: p_hat={:.4g} ({} samples)",
                    len(estimates),
                    total,
                    scheme.tag,
                    rate,
                    snr_db,
                    estimate.p_hat,
                    estimate.samples,
                )

        for earlier, later in monotonicity_violations(estimates):
            logger.warning(
                "P_o increases with SNR for {} R={}: {:.4g} at {} dB -> {:.4g} at {} dB",
                earlier.scheme,
                earlier.rate_bpcu,
                earlier.p_hat,
                earlier.snr_db,
                later.p_hat,
                later.snr_db,
            )
        return estimates

    def estimate_arq(
        self,
        spec: ChannelSpec,
        scheme: ArqLongTermStatic,
        r1: float,
        snr_db: float,
        policy: SamplingPolicy,
        seed: int,
    ) -> ArqEstimate:
        """Long-term throughput of the static ARQ protocol by renewal-reward accounting.

        Each sampled message sees one channel for all its rounds; abandoned
        messages consume L rounds and deliver nothing, so
        eta = r1 · (1 - p_err) / mean_rounds.
        """
        if not isinstance(scheme, ArqLongTermStatic):
            raise InvalidArgumentError(f"expected an ARQ scheme, got {scheme!r}")
        _check_point(r1, snr_db)
        rho = snr_db_to_linear(snr_db)
        stream = RngStream(seed, point_stream_index(r1, snr_db))

        def evaluate(rng: np.random.Generator, size: int) -> BlockTally:
            channels = sample_channels(rng, spec.n, spec.m, size)
            info = mutual_info_bits_batch(channels, rho, spec.m)
            rounds, delivered = arq_rounds(info, r1, scheme.max_rounds)
            return BlockTally(size, int(np.count_nonzero(~delivered)), int(rounds.sum()))

        tally, blocks = self._accumulate(stream, policy, evaluate)
        p_err = tally.hits / tally.samples
        mean_rounds = tally.rounds / tally.samples
        eta = r1 * (1.0 - p_err) / mean_rounds
        upper_bound_only = tally.hits == 0
        if upper_bound_only:
            ci_low, ci_high, _ = binomial_interval(0, tally.samples, policy.ci_confidence)
        else:
            ci_low, ci_high = wilson_interval(tally.hits, tally.samples, policy.ci_confidence)
        logger.debug(
            "{} {}x{} R1={} at {} dB: eta={:.4g}, {} failures in {} messages over {} blocks",
            scheme.tag,
            spec.m,
            spec.n,
            r1,
            snr_db,
            eta,
            tally.hits,
            tally.samples,
            blocks,
        )
        return ArqEstimate(
            scheme=scheme.tag,
            m=spec.m,
            n=spec.n,
            r1_bpcu=r1,
            snr_db=snr_db,
            eta=eta,
            p_err=p_err,
            ci_low=ci_low,
            ci_high=ci_high,
            mean_rounds=mean_rounds,
            samples=tally.samples,
            failures=tally.hits,
            seed=seed,
            upper_bound_only=upper_bound_only,
        )

    def sweep_arq(
        self,
        spec: ChannelSpec,
        scheme: ArqLongTermStatic,
        r1_list: list[float],
        snr_grid_db: list[float],
        policy: SamplingPolicy,
        seed: int,
    ) -> list[ArqEstimate]:
        if not r1_list:
            raise InvalidArgumentError("rates must not be empty")
        if not snr_grid_db:
            raise InvalidArgumentError("snr grid must not be empty")

        estimates = []
        for r1 in r1_list:
            for snr_db in snr_grid_db:
                estimate = self.estimate_arq(spec, scheme, r1, snr_db, policy, seed)
                estimates.append(estimate)
                logger.info(
                    "{} R1={} {} dB: eta={:.4g}, p_err={:.4g}",
                    scheme.tag,
                    r1,
                    snr_db,
                    estimate.eta,
                    estimate.p_err,
                )
        return estimates


def monotonicity_violations(
    estimates: Iterable[OutageEstimate],
) -> list[tuple[OutageEstimate, OutageEstimate]]:
    """SNR-adjacent pairs of one curve whose p_hat rises by more than 3 combined standard errors."""
    curves: dict[tuple, list[OutageEstimate]] = defaultdict(list)
    for estimate in estimates:
        curves[(estimate.scheme, estimate.m, estimate.n, estimate.rate_bpcu)].append(estimate)

    violations = []
    for curve in curves.values():
        ordered = sorted(curve, key=lambda estimate: estimate.snr_db)
        for earlier, later in zip(ordered, ordered[1:], strict=False):
            combined = math.hypot(earlier.standard_error, later.standard_error)
            if later.p_hat - earlier.p_hat > MONOTONICITY_SIGMAS * combined:
                violations.append((earlier, later))
    return violations
