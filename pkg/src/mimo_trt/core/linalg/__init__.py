from mimo_trt.core.linalg.channel_matrix import (
    frobenius_sq,
    frobenius_sq_batch,
    gram_eigenvalues,
    gram_eigenvalues_batch,
    mutual_info_bits,
    mutual_info_bits_batch,
    mutual_info_bits_det,
    mutual_info_from_eigenvalues,
    sample_channel,
    sample_channels,
)
from mimo_trt.core.linalg.jacobi import hermitian_eigenvalues

__all__ = [
    "frobenius_sq",
    "frobenius_sq_batch",
    "gram_eigenvalues",
    "gram_eigenvalues_batch",
    "hermitian_eigenvalues",
    "mutual_info_bits",
    "mutual_info_bits_batch",
    "mutual_info_bits_det",
    "mutual_info_from_eigenvalues",
    "sample_channel",
    "sample_channels",
]
