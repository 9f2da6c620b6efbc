import logging
from pathlib import Path
from textwrap import dedent

from satgraph.logging_utils import configure_logging_from
from satgraph.parameters import ParameterError, Parameters

import pytest


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    (level, handlers) = (root.level, list(root.handlers))
    yield
    root.setLevel(level)
    root.handlers = handlers


def _console_handlers():
    return [
        handler
        for handler in logging.getLogger().handlers
        if getattr(handler, "_satgraph_console", False)
    ]


def test_defaults(capsys):
    configure_logging_from(Parameters.empty())
    assert logging.getLogger().level == logging.INFO
    logging.getLogger("satgraph.test").info("to stderr")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "INFO:satgraph.test:to stderr" in captured.err


def test_level_and_stream(capsys):
    configure_logging_from(
        Parameters.from_mapping({"logging": {"root_level": "debug", "stream": "stdout"}})
    )
    assert logging.getLogger().level == logging.DEBUG
    logging.getLogger("satgraph.test").debug("to stdout")
    assert "DEBUG:satgraph.test:to stdout" in capsys.readouterr().out


def test_reconfiguring_replaces_the_handler():
    configure_logging_from(Parameters.empty())
    configure_logging_from(Parameters.from_mapping({"logging": {"root_level": "WARNING"}}))
    assert len(_console_handlers()) == 1
    assert _console_handlers()[0].level == logging.WARNING


def test_bad_values():
    with pytest.raises(ParameterError, match="Invalid logging level LOUD"):
        configure_logging_from(Parameters.from_mapping({"logging": {"root_level": "loud"}}))
    with pytest.raises(ParameterError, match="valid options"):
        configure_logging_from(Parameters.from_mapping({"logging": {"stream": "file"}}))


def test_config_file(tmp_path: Path, capsys):
    config_file = tmp_path / "logging.ini"
    config_file.write_text(
        dedent(
            """\
            [loggers]
            keys=root

            [handlers]
            keys=console

            [formatters]
            keys=plain

            [logger_root]
            level=WARNING
            handlers=console

            [handler_console]
            class=StreamHandler
            level=WARNING
            formatter=plain
            args=(sys.stderr,)

            [formatter_plain]
            format=plain %(message)s
            """
        ),
        encoding="utf-8",
    )
    configure_logging_from(
        Parameters.from_mapping({"logging": {"config_file": str(config_file)}})
    )
    assert logging.getLogger().level == logging.WARNING
    logging.getLogger("satgraph.test").warning("from the file config")
    assert "plain from the file config" in capsys.readouterr().err
