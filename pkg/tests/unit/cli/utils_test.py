"""Tests for CLI helpers."""

import logging

from omegaconf import OmegaConf

from circ_minors.cli.utils import ReportFormatter, int_list, limits_kwargs


def test_int_list():
    assert int_list(None) is None
    assert int_list("2,5, 9") == [2, 5, 9]
    assert int_list(OmegaConf.create({"b": [1, 4]}).b) == [1, 4]
    assert int_list((3, "7")) == [3, 7]


def test_limits_kwargs():
    cfg = OmegaConf.create({"limits": {"max_n": "10", "max_circuits": 5, "max_families": 6}})
    assert limits_kwargs(cfg) == {"max_n": 10, "max_circuits": 5, "max_families": 6}


def _record(name, message):
    return logging.LogRecord(name, logging.INFO, __file__, 1, message, None, None)


def test_formatter_indents_multiline_library_logs():
    formatter = ReportFormatter("%(levelname)s %(name)s: %(message)s", reset=False)
    text = formatter.format(_record("circ_minors.oracle", "first\nsecond"))
    first, second = text.split("\n")
    assert first == "INFO circ_minors.oracle: first"
    assert second == " " * len("INFO circ_minors.oracle: ") + "second"


def test_formatter_leaves_other_loggers_alone():
    formatter = ReportFormatter("%(name)s: %(message)s", reset=False)
    assert formatter.format(_record("hydra", "a\nb")) == "hydra: a\nb"


def test_formatter_stamps_delta():
    formatter = ReportFormatter("%(delta)s %(message)s", reset=False)
    record = _record("circ_minors", "hello")
    formatter.formatTime(record)
    assert record.delta.count(":") == 2
