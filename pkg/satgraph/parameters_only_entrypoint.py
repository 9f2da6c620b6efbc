import logging
import os
import sys
from argparse import ArgumentParser
from pathlib import Path
from typing import Callable, Optional, Sequence

from satgraph.budgets import BudgetExceededError
from satgraph.logging_utils import configure_logging_from
from satgraph.parameters import ParameterError, Parameters, YAMLParametersLoader
from satgraph.run_config import ExitCode

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

MainMethod = Callable[[Parameters], int]


def parameters_only_entry_point(
    main_method: MainMethod,
    usage_message: Optional[str] = None,
    *,
    parameters: Optional[Parameters] = None,
    program_name: Optional[str] = None,
) -> None:
    """
    Run *main_method* on parameters loaded from a single YAML file named on the command line,
    then exit with the code it returns.

    Logging is configured from the parameters (see `configure_logging_from`) and the
    parameters are logged. Pairs of the form ``-p param_name param_value`` override
    parameters from the file; separate namespace components with ``.``.

    If *parameters* is given, no parameter file is read.
    """
    # the real work is split off so argument parsing can be tested without exiting
    sys.exit(
        _real_parameters_only_entry_point(
            main_method,
            usage_message,
            parameters=parameters,
            program_name=program_name,
            args=sys.argv[1:],
        )
    )


def _real_parameters_only_entry_point(
    main_method: MainMethod,
    usage_message: Optional[str] = None,
    *,
    parameters: Optional[Parameters] = None,
    program_name: Optional[str] = None,
    args: Sequence[str],
) -> int:
    if not program_name:
        # the original script name, for the usage message
        import __main__ as main  # pylint:disable=import-outside-toplevel

        program_name = os.path.basename(getattr(main, "__file__", "satgraph"))

    arg_parser = ArgumentParser(prog=program_name, description=usage_message)
    if not parameters:
        arg_parser.add_argument("param_file", type=Path)
    arg_parser.add_argument("-p", action="append", nargs=2, required=False)

    parsed_args = arg_parser.parse_args(args)

    try:
        params = (
            parameters
            if parameters
            else YAMLParametersLoader().load(parsed_args.param_file)
        )
        if parsed_args.p:
            params = params.unify(Parameters.from_command_line_overrides(parsed_args.p))
        configure_logging_from(params)
    except ParameterError as e:
        log.error("%s", e)
        return ExitCode.ERROR
    log.info("Ran with parameters:\n%s", params)
    return run_reporting_errors(main_method, params)


def run_reporting_errors(main_method: MainMethod, params: Parameters) -> int:
    """
    Run *main_method*, turning the errors a user can cause into exit codes.

    Parameter, input and precondition errors give `ExitCode.ERROR` and an exceeded budget
    gives `ExitCode.BUDGET_EXCEEDED`. Anything else propagates.
    """
    try:
        return int(main_method(params))
    except BudgetExceededError as e:
        log.error("%s", e)
        return ExitCode.BUDGET_EXCEEDED
    except (ParameterError, ValueError, OSError) as e:
        log.error("%s", e)
        return ExitCode.ERROR
