from mimo_trt.core.tradeoff.coefficients import (
    identity_check,
    locate_scheme_region,
    mimo_coefficients,
    scheme_coefficients,
    scheme_regions,
)
from mimo_trt.core.tradeoff.dmt import dmt_curve, dmt_eval
from mimo_trt.core.tradeoff.exponent import (
    closed_form_sup,
    exponent_sup_oracle,
    exponent_sup_vertex,
    oracle_tolerance,
)
from mimo_trt.core.tradeoff.prediction import (
    THREE_DB,
    predict_log2_po,
    predict_snr_db,
    predicted_slope_per_decade,
    predicted_spacing_db,
)
from mimo_trt.core.tradeoff.regions import (
    classify_region,
    exact_region,
    region_label,
    scheme_region_rate,
)

__all__ = [
    "THREE_DB",
    "classify_region",
    "closed_form_sup",
    "dmt_curve",
    "dmt_eval",
    "exact_region",
    "exponent_sup_oracle",
    "exponent_sup_vertex",
    "identity_check",
    "locate_scheme_region",
    "mimo_coefficients",
    "oracle_tolerance",
    "predict_log2_po",
    "predict_snr_db",
    "predicted_slope_per_decade",
    "predicted_spacing_db",
    "region_label",
    "scheme_coefficients",
    "scheme_region_rate",
    "scheme_regions",
]
