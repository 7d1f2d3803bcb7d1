"""Service lookups used by the commands; tests replace them with monkeypatch."""

from mimo_trt.app.config import AppConfig
from mimo_trt.app.container import container
from mimo_trt.core.interfaces.report_writer import ReportWriter
from mimo_trt.core.interfaces.result_store import ResultStore
from mimo_trt.core.simulation import MonteCarloEngine


def resolve_app_config() -> AppConfig:
    return container.get(AppConfig)


def resolve_report_writer() -> ReportWriter:
    return container.get(ReportWriter)


def resolve_result_store() -> ResultStore:
    return container.get(ResultStore)


def resolve_engine(threads: int | None = None) -> MonteCarloEngine:
    if threads is not None:
        return MonteCarloEngine(threads=threads)
    return container.get(MonteCarloEngine)
