from wireup import injectable

from mimo_trt.app.config import AppConfig
from mimo_trt.core.simulation import MonteCarloEngine


@injectable
def get_monte_carlo_engine(app_config: AppConfig) -> MonteCarloEngine:
    return MonteCarloEngine(threads=app_config.threads)
