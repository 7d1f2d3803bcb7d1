import pytest

from mimo_trt.app.cli import resolve
from mimo_trt.app.cli.writers.report import RichReportWriter
from mimo_trt.app.config import AppConfig
from mimo_trt.core.simulation import MonteCarloEngine
from mimo_trt.libs.csv_result_store import CsvResultStore


@pytest.fixture(autouse=True)
def patched_services(monkeypatch):
    """Resolve command services to concrete single-threaded implementations."""
    config = AppConfig(threads=1)
    monkeypatch.setattr(resolve, "resolve_app_config", lambda: config)
    monkeypatch.setattr(resolve, "resolve_report_writer", lambda: RichReportWriter())
    monkeypatch.setattr(resolve, "resolve_result_store", lambda: CsvResultStore())
    monkeypatch.setattr(
        resolve,
        "resolve_engine",
        lambda threads=None: MonteCarloEngine(threads=threads or config.threads),
    )
    return config
