"""The entry-point of the command-line interface."""

import logging
import sys
from typing import Optional, TextIO

import hydra
from omegaconf import DictConfig
from omegaconf.errors import MissingMandatoryValue

from circ_minors.cli import commands
from circ_minors.cli.reports import render
from circ_minors.errors import CircMinorsError, InputError

logger = logging.getLogger(__name__)

# Exit statuses.
EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


def run(cfg: DictConfig, stream: Optional[TextIO] = None) -> int:
    """Runs the configured command and writes its report.

    Returns
    -------
    status : int
        0 on success, 1 on domain errors or discrepancies, 2 on input errors.
    """
    stream = stream or sys.stdout
    cfg = cfg.circ_minors
    try:
        command = cfg.command
        fn = commands.get(command)
        logger.info(f"Running {command}...")
        report = fn(cfg)
        stream.write(render(report, cfg.output) + "\n")
    except (InputError, MissingMandatoryValue, ValueError) as e:
        code = getattr(e, "code", e.__class__.__name__)
        logger.error(f"{code}: {e}")
        return EXIT_INPUT
    except CircMinorsError as e:
        logger.error(f"{e.code}: {e}")
        return EXIT_DOMAIN
    if not report.ok:
        logger.error(f"{command} found discrepancies.")
        return EXIT_DOMAIN
    logger.info("Done.")
    return EXIT_OK


@hydra.main(config_path="conf", config_name="config", version_base=None)
def main(cfg: DictConfig):
    sys.exit(run(cfg))


if __name__ == "__main__":
    main()
