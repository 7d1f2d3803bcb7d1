from importlib.metadata import version

import click

from mimo_trt.app.cli.analyze import analyze
from mimo_trt.app.cli.predict import predict
from mimo_trt.app.cli.regions import regions
from mimo_trt.app.cli.simulate import simulate
from mimo_trt.app.cli.verify import verify


@click.group()
@click.version_option(version=version("mimo-trt"), prog_name="mimo-trt")
def cli():
    """mimo-trt - outage curves and throughput-reliability tradeoff of MIMO channels."""
    pass


cli.add_command(predict)
cli.add_command(simulate)
cli.add_command(analyze)
cli.add_command(verify)
cli.add_command(regions)

if __name__ == "__main__":
    cli()
