import numpy as np

from mimo_trt.core.linalg import mutual_info_bits
from mimo_trt.entities.channel import ChannelSpec, ComplexMatrix
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.estimate import ArqOutcome
from mimo_trt.entities.scheme import ArqLongTermStatic


def arq_rounds(info: np.ndarray, r1: float, max_rounds: int) -> tuple[np.ndarray, np.ndarray]:
    """Rounds used and delivery flags for messages whose channels carry `info` bits per use.

    A message is decoded after round p once the accumulated mutual
    information p·I reaches the first-round rate R1; messages still short
    after L rounds are abandoned and charged L rounds.

    Returns:
        (rounds_used, delivered) arrays shaped like `info`.
    """
    rounds = np.full(info.shape, max_rounds, dtype=np.int64)
    delivered = np.zeros(info.shape, dtype=bool)
    for p in range(max_rounds, 0, -1):
        decoded = p * info >= r1
        rounds = np.where(decoded, p, rounds)
        delivered |= decoded
    return rounds, delivered


def arq_outcome(
    H: ComplexMatrix, spec: ChannelSpec, scheme: ArqLongTermStatic, rho: float, R1: float
) -> ArqOutcome:
    """Replay the long-term static ARQ rounds of one message over channel H."""
    spec.check_matrix(H)
    if not R1 > 0.0:
        raise InvalidArgumentError(f"R1 must be positive, got {R1}")
    info = np.asarray([mutual_info_bits(H, rho, spec.m)])
    rounds, delivered = arq_rounds(info, R1, scheme.max_rounds)
    return ArqOutcome(rounds_used=int(rounds[0]), delivered=bool(delivered[0]))
