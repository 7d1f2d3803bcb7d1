from mimo_trt.core.snr import snr_db_to_linear
from mimo_trt.core.tradeoff import region_label
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.tradeoff import RegionLabel


def region_transitions(
    m: int, n: int, R: float, snr_grid_db: list[float], delta: float, exact: bool = False
) -> list[tuple[float, RegionLabel]]:
    """Region labels along a constant-rate SNR trajectory, reported only where they change.

    The first grid point is always reported. With `exact`, the asymptotic
    region map replaces the delta rule of thumb. Grid points at or below
    0 dB are degenerate.
    """
    if not snr_grid_db:
        raise InvalidArgumentError("snr grid must not be empty")
    if not 0.0 < delta < 1.0:
        raise InvalidArgumentError(f"delta must be in (0, 1), got {delta}")

    changes: list[tuple[float, RegionLabel]] = []
    for snr_db in snr_grid_db:
        label = region_label(m, n, R, snr_db_to_linear(snr_db), delta, exact=exact)
        if not changes or not changes[-1][1].same_region(label):
            changes.append((snr_db, label))
    return changes
