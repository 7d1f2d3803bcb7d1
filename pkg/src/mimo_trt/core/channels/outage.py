"""Per-realization outage events of every transmission scheme.

Each predicate has a batched form working on a stack of channels of shape
(count, n, m); the single-matrix predicates are the batch of one.
"""

import math
from itertools import combinations

import numpy as np

from mimo_trt.core.channels.arq import arq_rounds
from mimo_trt.core.linalg import (
    frobenius_sq_batch,
    hermitian_eigenvalues,
    mutual_info_bits_batch,
    mutual_info_from_eigenvalues,
)
from mimo_trt.entities.channel import ChannelSpec, ComplexMatrix
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.scheme import (
    ArqLongTermStatic,
    MimoLowerBound,
    MimoOptimal,
    Orthogonal,
    Scheme,
    VblastMl,
    check_scheme_for_spec,
)


def _check_rate(rate: float) -> None:
    if not rate > 0.0:
        raise InvalidArgumentError(f"rate must be positive, got {rate}")


def mimo_outage_batch(channels: np.ndarray, m: int, rho: float, rate: float) -> np.ndarray:
    return mutual_info_bits_batch(channels, rho, m) < rate


def mimo_lower_bound_outage_batch(channels: np.ndarray, rho: float, rate: float) -> np.ndarray:
    return mutual_info_bits_batch(channels, rho, 1) < rate


def vblast_outage_batch(channels: np.ndarray, m: int, rho: float, rate: float) -> np.ndarray:
    """True where some antenna subset S cannot carry its share (|S| / m)·R.

    The transmit-side Gram matrix Hᴴ·H is formed once per realization; each
    subset reads its principal submatrix, whose eigenvalues are the non-zero
    eigenvalues of H_S·H_Sᴴ.
    """
    gram = channels.conj().swapaxes(-1, -2) @ channels
    outage = np.zeros(channels.shape[0], dtype=bool)
    for size in range(1, m + 1):
        share = size / m * rate
        for subset in combinations(range(m), size):
            index = list(subset)
            block = gram[:, index][:, :, index]
            eigenvalues = np.maximum(hermitian_eigenvalues(block), 0.0)
            outage |= mutual_info_from_eigenvalues(eigenvalues, rho / m) < share
    return outage


def orthogonal_outage_batch(
    channels: np.ndarray, m: int, scheme: Orthogonal, rho: float, rate: float
) -> np.ndarray:
    """True where the equivalent scalar channel with gain ‖H‖² cannot carry rate R.

    The orthogonal design turns H into a 1 x mn channel of rate (l / k_sym)·R.
    """
    gain = rho / m * frobenius_sq_batch(channels)
    return float(scheme.code_rate) * np.log1p(gain) / math.log(2.0) < rate


def outage_batch(
    scheme: Scheme, channels: np.ndarray, spec: ChannelSpec, rho: float, rate: float
) -> np.ndarray:
    """Outage indicator of `scheme` for a stack of channels.

    For ARQ the event is an abandoned message (not delivered within L rounds)
    at first-round rate `rate`.
    """
    match scheme:
        case MimoOptimal():
            return mimo_outage_batch(channels, spec.m, rho, rate)
        case MimoLowerBound():
            return mimo_lower_bound_outage_batch(channels, rho, rate)
        case VblastMl():
            return vblast_outage_batch(channels, spec.m, rho, rate)
        case Orthogonal():
            return orthogonal_outage_batch(channels, spec.m, scheme, rho, rate)
        case ArqLongTermStatic(max_rounds=max_rounds):
            info = mutual_info_bits_batch(channels, rho, spec.m)
            _, delivered = arq_rounds(info, rate, max_rounds)
            return ~delivered
    raise InvalidArgumentError(f"unsupported scheme {scheme!r}")


def _single(H: ComplexMatrix) -> np.ndarray:
    return H.data[None, :, :]


def mimo_outage(H: ComplexMatrix, spec: ChannelSpec, rho: float, R: float) -> bool:
    """True iff log2 det(I + (rho / m) H·Hᴴ) < R."""
    spec.check_matrix(H)
    _check_rate(R)
    return bool(mimo_outage_batch(_single(H), spec.m, rho, R)[0])


def mimo_outage_lower(H: ComplexMatrix, spec: ChannelSpec, rho: float, R: float) -> bool:
    """True iff log2 det(I + rho H·Hᴴ) < R, the event whose probability lower-bounds P_o."""
    spec.check_matrix(H)
    _check_rate(R)
    return bool(mimo_lower_bound_outage_batch(_single(H), rho, R)[0])


def vblast_outage(H: ComplexMatrix, spec: ChannelSpec, rho: float, R: float) -> bool:
    """True iff some antenna subset S has log2 det(I + (rho/m) H_S·H_Sᴴ) < (|S| / m)·R."""
    check_scheme_for_spec(VblastMl(), spec.m, spec.n)
    spec.check_matrix(H)
    _check_rate(R)
    return bool(vblast_outage_batch(_single(H), spec.m, rho, R)[0])


def orthogonal_outage(
    H: ComplexMatrix, spec: ChannelSpec, scheme: Orthogonal, rho: float, R: float
) -> bool:
    """True iff (k_sym / l)·log2(1 + (rho / m)·‖H‖²) < R."""
    if not isinstance(scheme, Orthogonal):
        raise InvalidArgumentError(f"expected an orthogonal scheme, got {scheme!r}")
    if not rho > 0.0:
        raise InvalidArgumentError(f"rho must be positive, got {rho}")
    spec.check_matrix(H)
    _check_rate(R)
    return bool(orthogonal_outage_batch(_single(H), spec.m, scheme, rho, R)[0])
