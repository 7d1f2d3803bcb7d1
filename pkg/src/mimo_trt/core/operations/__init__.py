from mimo_trt.core.operations.analyze_operation import AnalyzeOperation
from mimo_trt.core.operations.predict_operation import PredictOperation, point_region_label
from mimo_trt.core.operations.simulate_operation import SimulateOperation
from mimo_trt.core.operations.verify_operation import VerifyOperation

__all__ = [
    "AnalyzeOperation",
    "PredictOperation",
    "SimulateOperation",
    "VerifyOperation",
    "point_region_label",
]
