from contextlib import contextmanager

import click
from pydantic import ValidationError

from mimo_trt.entities.errors import InvalidArgumentError, TrtError


@contextmanager
def cli_errors():
    """Turn domain, validation and I/O failures into click errors with a non-zero exit."""
    try:
        yield
    except InvalidArgumentError as e:
        raise click.UsageError(str(e)) from e
    except ValidationError as e:
        messages = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}"
            for error in e.errors()
        )
        raise click.UsageError(messages) from e
    except TrtError as e:
        raise click.ClickException(str(e)) from e
    except OSError as e:
        raise click.ClickException(f"I/O error: {e}") from e
