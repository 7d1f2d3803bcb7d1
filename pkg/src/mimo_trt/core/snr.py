"""SNR unit conversion. SNR is exchanged in dB and used linearly; this is the only conversion."""

import math


def snr_db_to_linear(snr_db: float) -> float:
    return 10.0 ** (snr_db / 10.0)


def snr_linear_to_db(rho: float) -> float:
    return 10.0 * math.log10(rho)
