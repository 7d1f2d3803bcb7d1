import wireup

import mimo_trt.app.cli.writers.report as report_writer
import mimo_trt.app.config as config
import mimo_trt.app.services as services
from mimo_trt import libs

container = wireup.create_sync_container(
    injectables=[config, services, report_writer, libs],
)
