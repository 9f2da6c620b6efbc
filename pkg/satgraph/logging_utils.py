import logging
import logging.config
import sys

from satgraph.parameters import ParameterError, Parameters

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

# logging has no non-deprecated way to map level names to levels
_LEVEL_STRINGS_TO_LEVELS = {
    "CRITICAL": logging.CRITICAL,
    "FATAL": logging.FATAL,
    "ERROR": logging.ERROR,
    "WARNING": logging.WARNING,
    "WARN": logging.WARNING,
    "INFO": logging.INFO,
    "DEBUG": logging.DEBUG,
}

_STREAMS = ("stdout", "stderr")

_FORMAT = "[%(asctime)s] %(levelname)s:%(name)s:%(message)s"
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


# log_params defaults to false because callers usually log the parameters themselves
def configure_logging_from(params: Parameters, *, log_params: bool = False) -> None:
    """
    Configures logging from the 'logging' namespace of *params*.

    If ``logging.config_file`` is given, logging is configured from the file it names.
    Otherwise the root logger gets level ``logging.root_level`` (default INFO) and a console
    handler on ``logging.stream``, which is ``stderr`` unless set to ``stdout``. Standard
    output is left to the commands' own output.
    """
    if "logging.config_file" in params:
        logging.config.fileConfig(
            str(params.existing_file("logging.config_file")), disable_existing_loggers=False
        )
    else:
        _config_logging_from_params(params)

    if log_params:
        log.info(str(params))


def _config_logging_from_params(params: Parameters) -> None:
    level_name = params.string("logging.root_level", default="INFO").upper()
    try:
        level = _LEVEL_STRINGS_TO_LEVELS[level_name]
    except KeyError:
        raise ParameterError(
            f"Invalid logging level {level_name}. Valid levels are "
            f"{list(_LEVEL_STRINGS_TO_LEVELS.keys())}"
        )
    stream_name = params.string(
        "logging.stream", valid_options=_STREAMS, default="stderr"
    )

    root = logging.getLogger()
    root.setLevel(level)
    # repeated configuration in one process replaces the handler rather than stacking them
    for handler in list(root.handlers):
        if getattr(handler, "_satgraph_console", False):
            root.removeHandler(handler)
    console_handler = logging.StreamHandler(stream=getattr(sys, stream_name))
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(_FORMAT, _DATE_FORMAT))
    setattr(console_handler, "_satgraph_console", True)
    root.addHandler(console_handler)
