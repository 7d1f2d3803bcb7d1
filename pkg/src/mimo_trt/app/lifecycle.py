import sys
from contextlib import contextmanager
from functools import wraps

from loguru import logger

from mimo_trt.app.config import AppConfig
from mimo_trt.app.container import container


@contextmanager
def app_lifecycle(verbose: bool = False):
    """Install the loguru sinks described by AppConfig for the duration of a command.

    stderr logs at `log_level` (DEBUG with `verbose`); `log_file`, when set,
    receives the same records.
    """
    config = container.get(AppConfig)
    level = "DEBUG" if verbose else config.log_level
    logger.remove()
    sink_ids = [logger.add(sys.stderr, level=level)]
    if config.log_file is not None:
        sink_ids.append(logger.add(config.log_file, level=level))
    try:
        yield config
    finally:
        for sink_id in sink_ids:
            logger.remove(sink_id)


def with_lifecycle(func):
    """Decorator running a click command inside `app_lifecycle`.

    Consumes the `verbose` keyword added by the common `--verbose` option.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        verbose = kwargs.pop("verbose", False)
        with app_lifecycle(verbose):
            return func(*args, **kwargs)

    return wrapper
