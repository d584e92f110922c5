"""
Command Line Interface for ioncool
"""

import functools
import logging
import sys
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ..config.models import EXPERIMENT_PARAMETERS
from ..constants import (
    EXIT_CONFIG_ERROR,
    EXIT_FAILURE,
    EXIT_NUMERICAL_ERROR,
    VALID_EXPERIMENTS,
)
from ..core import CoolingLab
from ..exceptions import ConfigError, NumericalError


console = Console()
error_console = Console(stderr=True)

logger = logging.getLogger(__name__)


class CLIContext:
    """Context object for CLI commands"""

    def __init__(self):
        self.env_file: Optional[str] = None
        self.verbose = False
        self.lab: Optional[CoolingLab] = None

    def ensure_initialized(self) -> CoolingLab:
        """Create the CoolingLab and configure logging on first use"""
        if self.lab is None:
            self.lab = CoolingLab(self.env_file)
            configure_logging(
                "DEBUG" if self.verbose else self.lab.config.get("log_level"),
                self.lab.config.get("log_file"),
            )
        return self.lab


# Global context
ctx = CLIContext()


def configure_logging(level: str, log_file: Optional[str] = None) -> None:
    handlers = [RichHandler(console=error_console, show_path=False, rich_tracebacks=True)]
    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        handlers.append(file_handler)
    logging.basicConfig(level=level.upper(), format="%(message)s", handlers=handlers, force=True)


def handle_errors(f):
    """Decorator mapping failures to exit codes: config 2, numerical 3, other 1"""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ConfigError as e:
            error_console.print(f"[red]Configuration error:[/red] {e}")
            sys.exit(EXIT_CONFIG_ERROR)
        except NumericalError as e:
            error_console.print(f"[red]Numerical failure:[/red] {e}")
            sys.exit(EXIT_NUMERICAL_ERROR)
        except Exception as e:
            error_console.print(f"[red]Error:[/red] {e}")
            logger.debug("CLI command failed", exc_info=True)
            sys.exit(EXIT_FAILURE)

    return wrapper


def _experiments_epilog() -> str:
    lines = ["\b", "Experiments and their parameter keys:"]
    for name in VALID_EXPERIMENTS:
        keys = ", ".join(EXPERIMENT_PARAMETERS[name].model_fields)
        lines.append(f"  {name}: {keys}")
    return "\n".join(lines)


@click.group()
@click.option("--env-file", type=click.Path(dir_okay=False), help="Path to .env file (default: auto-detect)")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def cli(env_file, verbose):
    """ioncool - trapped-ion cooling simulations and batch experiments"""
    ctx.env_file = env_file
    ctx.verbose = verbose
    ctx.lab = None


@cli.command(epilog=_experiments_epilog())
@click.argument("config_path", type=click.Path(dir_okay=False))
@click.option(
    "--out", "output_dir", type=click.Path(file_okay=False), help="Output directory (overrides the config)"
)
@handle_errors
def run(config_path, output_dir):
    """Run the experiment described by a JSON config file"""
    lab = ctx.ensure_initialized()
    manifest = lab.run(config_path, output_dir)

    table = Table(title=f"{manifest.experiment} ({manifest.wall_time_s:.2f} s)")
    table.add_column("Artifact", style="cyan", no_wrap=True)
    table.add_column("Bytes", justify="right")
    table.add_column("SHA-256", style="dim")
    for artifact in manifest.artifacts:
        table.add_row(artifact.path, str(artifact.size_bytes), artifact.sha256[:16])
    console.print(table)


@cli.command("list")
@handle_errors
def list_command():
    """List the available experiments"""
    lab = ctx.ensure_initialized()

    table = Table(title="Experiments")
    table.add_column("Name", style="cyan", no_wrap=True)
    table.add_column("Description")
    table.add_column("Keys", style="dim")
    for entry in lab.list_experiments():
        table.add_row(entry["name"], entry["description"], ", ".join(entry["keys"]))
    console.print(table)


@cli.command()
@click.argument("experiment", type=click.Choice(VALID_EXPERIMENTS))
@handle_errors
def schema(experiment):
    """Show the parameter keys of one experiment"""
    lab = ctx.ensure_initialized()

    table = Table(title=f"{experiment} parameters")
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Type")
    table.add_column("Default")
    table.add_column("Constraints", style="dim")
    for row in lab.schema(experiment):
        table.add_row(row["key"], row["type"], repr(row["default"]), row["constraints"])
    console.print(table)


def main():
    """Entry point for the CLI"""
    cli()


if __name__ == "__main__":
    main()
