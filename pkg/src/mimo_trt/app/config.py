import os
from pathlib import Path

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from wireup import injectable

SETTINGS_ENV = "TRT_SETTINGS"
THREADS_ENV = "TRT_THREADS"


def _default_threads() -> int:
    return os.cpu_count() or 1


class AppConfig(BaseModel):
    model_config = ConfigDict(extra="ignore")

    threads: int = Field(default_factory=_default_threads, ge=1)
    log_level: str = "WARNING"
    log_file: Path | None = None
    default_max_samples: int = Field(default=1_000_000, ge=1_000)
    default_target_hits: int = Field(default=200, ge=1)
    default_confidence: float = Field(default=0.95, gt=0, lt=1)
    default_delta: float = Field(default=0.1, gt=0, lt=1)


def _default_settings_path() -> Path:
    override = os.getenv(SETTINGS_ENV)
    if override:
        return Path(override)
    return Path.home() / ".mimo-trt" / "settings.json"


def load_app_config(path: Path | None = None) -> AppConfig:
    """Defaults, overlaid by the settings file when it exists, then by TRT_THREADS."""
    path = path or _default_settings_path()
    if path.is_file():
        config = AppConfig.model_validate_json(path.read_text(encoding="utf-8"))
    else:
        config = AppConfig()

    threads = os.getenv(THREADS_ENV)
    if threads:
        try:
            config = config.model_copy(update={"threads": max(1, int(threads))})
        except ValueError:
            logger.warning("Ignoring {}={!r}: not an integer", THREADS_ENV, threads)
    return config


@injectable
def get_app_config() -> AppConfig:
    return load_app_config()
