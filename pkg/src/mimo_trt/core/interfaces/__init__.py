from mimo_trt.core.interfaces.report_writer import ReportWriter
from mimo_trt.core.interfaces.result_store import ResultStore

__all__ = ["ReportWriter", "ResultStore"]
