import math

import numpy as np

from mimo_trt.core.linalg.jacobi import hermitian_eigenvalues
from mimo_trt.entities.channel import ComplexMatrix, EigenSpectrum, RngStream, check_dimension
from mimo_trt.entities.errors import InvalidArgumentError

_LN2 = math.log(2.0)


def _check_snr(rho: float) -> None:
    if not rho > 0.0:
        raise InvalidArgumentError(f"rho must be positive, got {rho}")


def _check_power_split(power_split: int) -> None:
    if power_split < 1:
        raise InvalidArgumentError(f"power_split must be >= 1, got {power_split}")


def sample_channels(rng: np.random.Generator, n: int, m: int, count: int) -> np.ndarray:
    """Draw `count` i.i.d. n x m Rayleigh channels as an array of shape (count, n, m).

    Entries are circularly-symmetric CN(0, 1): real and imaginary parts each have variance 1/2.
    """
    real = rng.standard_normal((count, n, m))
    imag = rng.standard_normal((count, n, m))
    return (real + 1j * imag) * math.sqrt(0.5)


def gram_eigenvalues_batch(channels: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of H·Hᴴ for a stack of channels, shape (count, min(n, m)).

    The Gram matrix is formed on the smaller side, so no structural zeros appear.
    Round-off negatives are clamped to zero.
    """
    n, m = channels.shape[-2], channels.shape[-1]
    adjoint = channels.conj().swapaxes(-1, -2)
    gram = channels @ adjoint if n <= m else adjoint @ channels
    values = hermitian_eigenvalues(gram)
    return np.maximum(values, 0.0)


def mutual_info_bits_batch(channels: np.ndarray, rho: float, power_split: int) -> np.ndarray:
    """log2 det(I + (rho / power_split) H·Hᴴ) per channel of the stack, from its eigenvalues."""
    _check_snr(rho)
    _check_power_split(power_split)
    return mutual_info_from_eigenvalues(gram_eigenvalues_batch(channels), rho / power_split)


def mutual_info_from_eigenvalues(eigenvalues: np.ndarray, gain: float) -> np.ndarray:
    return np.sum(np.log1p(gain * eigenvalues), axis=-1) / _LN2


def frobenius_sq_batch(channels: np.ndarray) -> np.ndarray:
    return np.sum(channels.real**2 + channels.imag**2, axis=(-2, -1))


def sample_channel(stream: RngStream, n: int, m: int) -> ComplexMatrix:
    """Draw one n x m channel from the stream's own (block-free) sub-stream."""
    check_dimension("n", n)
    check_dimension("m", m)
    return ComplexMatrix(sample_channels(stream.generator(), n, m, 1)[0])


def gram_eigenvalues(H: ComplexMatrix) -> EigenSpectrum:
    """Ascending eigenvalues of H·Hᴴ, min(rows, cols) of them."""
    values = gram_eigenvalues_batch(H.data[None, :, :])[0]
    return EigenSpectrum(values=tuple(float(value) for value in values))


def mutual_info_bits(H: ComplexMatrix, rho: float, power_split: int) -> float:
    """Instantaneous mutual information log2 det(I + (rho / power_split) H·Hᴴ) in bits per use.

    Args:
        H: Channel realization.
        rho: Linear SNR per receive antenna.
        power_split: Number of antennas the transmit power is split across
            (m for the optimal scheme).
    """
    _check_snr(rho)
    _check_power_split(power_split)
    spectrum = np.asarray(gram_eigenvalues(H).values)
    return float(mutual_info_from_eigenvalues(spectrum, rho / power_split))


def mutual_info_bits_det(H: ComplexMatrix, rho: float, power_split: int) -> float:
    """Same quantity as `mutual_info_bits`, evaluated directly from the determinant."""
    _check_snr(rho)
    _check_power_split(power_split)
    identity = np.eye(H.rows, dtype=np.complex128)
    _, log_det = np.linalg.slogdet(identity + (rho / power_split) * (H.data @ H.data.conj().T))
    return float(log_det / _LN2)


def frobenius_sq(H: ComplexMatrix) -> float:
    return float(frobenius_sq_batch(H.data))
