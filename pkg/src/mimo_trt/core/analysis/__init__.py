from mimo_trt.core.analysis.geometry import (
    DEFAULT_WINDOW_DB,
    centred_window,
    deepest_window,
    local_slope,
    make_curve_point,
    snr_at_level,
    spacing_at_level,
    to_curve_points,
)
from mimo_trt.core.analysis.oracles import (
    gamma_exact,
    gamma_rho_for_level,
    siso_exact,
    siso_rho_for_level,
)
from mimo_trt.core.analysis.transitions import region_transitions

__all__ = [
    "DEFAULT_WINDOW_DB",
    "centred_window",
    "deepest_window",
    "gamma_exact",
    "gamma_rho_for_level",
    "local_slope",
    "make_curve_point",
    "region_transitions",
    "siso_exact",
    "siso_rho_for_level",
    "snr_at_level",
    "spacing_at_level",
    "to_curve_points",
]
