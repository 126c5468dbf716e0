"""Utility functions for the command-line interface."""

import datetime
import logging
import re
from typing import Any, Dict, List, Optional

import colorlog
from omegaconf import DictConfig, OmegaConf

logger = logging.getLogger(__name__)


def limits_kwargs(cfg: DictConfig) -> Dict[str, int]:
    """Unpacks the `limits` node into keyword arguments of the oracle."""
    return {
        "max_n": int(cfg.limits.max_n),
        "max_circuits": int(cfg.limits.max_circuits),
        "max_families": int(cfg.limits.max_families),
    }


def int_list(value: Any) -> Optional[List[int]]:
    """Turns a config list (or a comma-separated string) into a list of ints."""
    if value is None:
        return None
    if isinstance(value, str):
        return [int(v) for v in value.replace(",", " ").split()]
    if OmegaConf.is_config(value):
        value = OmegaConf.to_container(value, resolve=True)
    return [int(v) for v in value]


class ReportFormatter(colorlog.ColoredFormatter):
    """Custom log formatter that nicely indents multiline library logs and
    formats times relative to the start of the process.
    """

    _COLOR_REGEX = re.compile(r"\033\[[\d;]*m")

    def formatMessage(self, record):
        original_message = record.message.strip()
        if record.name.startswith("circ_minors") and "\n" in original_message:
            # Determine the length of everything besides the message.
            record.message = ""
            prefix = super(ReportFormatter, self).formatMessage(record)
            indent = len(self._COLOR_REGEX.sub("", prefix))
            lines = original_message.split("\n")
            record.message = "\n".join(
                [lines[0]] + [(" " * indent) + line.strip() for line in lines[1:]]
            )
        return super(ReportFormatter, self).formatMessage(record)

    def formatTime(self, record, datefmt=None):
        """Stamps `record.delta` with the time elapsed since the process started."""
        duration = datetime.datetime.utcfromtimestamp(record.relativeCreated / 1000)
        record.delta = duration.strftime("%H:%M:%S")
        return super(ReportFormatter, self).formatTime(record, datefmt)
