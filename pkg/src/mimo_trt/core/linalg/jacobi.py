"""Cyclic Jacobi eigenvalue solver for stacks of small Hermitian matrices.

Every (p, q) rotation is applied to the whole stack at once, so a batch of
channel realizations costs one numpy pass per pivot rather than one Python
loop per matrix.
"""

import numpy as np
from loguru import logger

from mimo_trt.entities.errors import InvalidArgumentError

JACOBI_TOLERANCE = 1e-12
MAX_SWEEPS = 64


def _off_diagonal_norm(a: np.ndarray) -> np.ndarray:
    mask = ~np.eye(a.shape[-1], dtype=bool)
    return np.sqrt(np.sum(np.abs(a[:, mask]) ** 2, axis=-1))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    """Zero a[:, p, q] in place with the unitary diag(1, e^-i·phi) · Givens(theta)."""
    apq = a[:, p, q]
    magnitude = np.abs(apq)
    nonzero = magnitude > 0.0
    phase = np.where(nonzero, apq / np.where(nonzero, magnitude, 1.0), 1.0)
    theta = 0.5 * np.arctan2(2.0 * magnitude, a[:, q, q].real - a[:, p, p].real)
    theta = np.where(nonzero, theta, 0.0)
    c = np.cos(theta)[:, None]
    s = np.sin(theta)[:, None]
    back = phase.conj()[:, None]

    col_p = a[:, :, p].copy()
    col_q = a[:, :, q].copy()
    a[:, :, p] = c * col_p - s * back * col_q
    a[:, :, q] = s * col_p + c * back * col_q

    row_p = a[:, p, :].copy()
    row_q = a[:, q, :].copy()
    a[:, p, :] = c * row_p - s * back.conj() * row_q
    a[:, q, :] = s * row_p + c * back.conj() * row_q

    a[:, p, q] = 0.0
    a[:, q, p] = 0.0
    a[:, p, p] = a[:, p, p].real
    a[:, q, q] = a[:, q, q].real


def hermitian_eigenvalues(
    matrices: np.ndarray, tolerance: float = JACOBI_TOLERANCE, max_sweeps: int = MAX_SWEEPS
) -> np.ndarray:
    """Eigenvalues of one Hermitian matrix or of a stack of them, ascending along the last axis.

    Sweeps stop for a matrix once its off-diagonal Frobenius norm falls below
    `tolerance` times its own Frobenius norm.

    Args:
        matrices: Array of shape (..., k, k); only the Hermitian part is used.
        tolerance: Relative off-diagonal tolerance.
        max_sweeps: Cap on the number of cyclic sweeps.

    Returns:
        Real array of shape (..., k).
    """
    a = np.array(matrices, dtype=np.complex128, copy=True)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise InvalidArgumentError(f"expected square matrices, got shape {a.shape}")

    batch_shape = a.shape[:-2]
    size = a.shape[-1]
    a = a.reshape(-1, size, size)
    a = 0.5 * (a + a.conj().transpose(0, 2, 1))

    frobenius = np.linalg.norm(a, axis=(1, 2))
    threshold = tolerance * np.where(frobenius > 0.0, frobenius, 1.0)
    pivots = [(p, q) for p in range(size - 1) for q in range(p + 1, size)]

    for _ in range(max_sweeps):
        active = _off_diagonal_norm(a) > threshold
        if not active.any():
            break
        unconverged = a[active]
        for p, q in pivots:
            _rotate(unconverged, p, q)
        a[active] = unconverged
    else:
        remaining = int(np.count_nonzero(_off_diagonal_norm(a) > threshold))
        if remaining:
            logger.warning(
                "Jacobi sweep cap of {} reached with {} matrices unconverged", max_sweeps, remaining
            )

    values = np.sort(a.diagonal(axis1=1, axis2=2).real, axis=-1)
    return values.reshape(*batch_shape, size)
