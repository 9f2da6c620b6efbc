"""
The ``satgraph`` command.

Each subcommand turns its flags into `Parameters`, layered over an optional
``--param-file`` and followed by any ``-p NAME VALUE`` overrides, and hands them to the
``main`` of the matching module in `satgraph.scripts`.
"""
import logging
import sys
from argparse import ArgumentParser, RawDescriptionHelpFormatter
from enum import Enum
from typing import Any, Dict, List, NoReturn, Optional, Sequence, Type

from satgraph.logging_utils import configure_logging_from
from satgraph.parameters import ParameterError, Parameters, YAMLParametersLoader
from satgraph.parameters_only_entrypoint import MainMethod, run_reporting_errors
from satgraph.run_config import (
    Command,
    ConstructionKind,
    ExitCode,
    OutputFormat,
    parameter_value,
)
from satgraph.saturation import Family, SearchMode
from satgraph.scripts import construct, search, spectral, table, verify
from satgraph.version import version

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

_MAINS: Dict[Command, MainMethod] = {
    Command.CONSTRUCT: construct.main,
    Command.VERIFY: verify.main,
    Command.SEARCH: search.main,
    Command.TABLE: table.main,
    Command.SPECTRAL: spectral.main,
}

_EXIT_CODE_HELP = """exit codes:
  0  success; for verify, the graph is saturated
  1  usage, parameter or input error
  2  verify: the graph contains a member of the family
  3  verify: some non-edge can be added without creating a member
  4  the search or detector budget was exceeded
  5  spectral: the partition is not equitable
  6  search or table: a searched value contradicts its closed form

SATGRAPH_BUDGET_NODES replaces the default vertex budgets of search and the k-connected
detector; --budget overrides it.
"""

# argparse destinations which are not command parameters
_NOT_PARAMETERS = ("command", "param_file", "p", "log_level")


class _ArgumentParser(ArgumentParser):
    """
    Reports usage errors with exit code 1, since 2 is a verdict.
    """

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.ERROR, f"{self.prog}: error: {message}\n")


def _choices(enum_class: Type[Enum]) -> List[str]:
    return [member.value for member in enum_class]


def build_parser() -> ArgumentParser:
    parser = _ArgumentParser(
        prog="satgraph",
        description="Constructions, saturation checks, exhaustive search and spectral "
        "bounds for k-edge-connectivity and k-connectivity saturation.",
        epilog=_EXIT_CODE_HELP,
        formatter_class=RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    parser.add_argument("--param-file", help="YAML file of parameters for the command")
    parser.add_argument(
        "-p",
        action="append",
        nargs=2,
        metavar=("NAME", "VALUE"),
        help="override a parameter; VALUE is read as YAML",
    )
    parser.add_argument(
        "--log-level", choices=["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    construct_parser = subparsers.add_parser(
        Command.CONSTRUCT.value, help="build a named graph"
    )
    construct_parser.add_argument("--kind", choices=_choices(ConstructionKind))
    construct_parser.add_argument("--k", type=int)
    construct_parser.add_argument("--n", type=int)
    construct_parser.add_argument("--seed", type=int, help="seed for --kind ktree")
    construct_parser.add_argument("--out", help="edge-list or JSON file to write")
    construct_parser.add_argument("--format", choices=_choices(OutputFormat))

    verify_parser = subparsers.add_parser(
        Command.VERIFY.value, help="check whether a graph is saturated"
    )
    verify_parser.add_argument("input", nargs="?", help="edge-list file")
    verify_parser.add_argument("--k", type=int)
    verify_parser.add_argument("--family", choices=_choices(Family))
    verify_parser.add_argument("--budget", type=int)

    search_parser = subparsers.add_parser(
        Command.SEARCH.value, help="find the fewest or most edges of a saturated graph"
    )
    search_parser.add_argument("--n", type=int)
    search_parser.add_argument("--k", type=int)
    search_parser.add_argument("--family", choices=_choices(Family))
    search_parser.add_argument("--mode", choices=_choices(SearchMode))
    search_parser.add_argument("--workers", type=int)
    search_parser.add_argument("--budget", type=int)
    search_parser.add_argument("--out")

    table_parser = subparsers.add_parser(
        Command.TABLE.value, help="closed forms against searched values, as CSV"
    )
    table_parser.add_argument("--k", type=int)
    table_parser.add_argument("--n", dest="n_range", metavar="A..B")
    table_parser.add_argument("--family", choices=[Family.EDGE.value])
    table_parser.add_argument("--workers", type=int)
    table_parser.add_argument("--budget", type=int)
    table_parser.add_argument("--out")

    spectral_parser = subparsers.add_parser(
        Command.SPECTRAL.value, help="spectral radius, degree bounds and quotient matrices"
    )
    spectral_parser.add_argument("input", nargs="?", help="edge-list file")
    spectral_parser.add_argument("--k", type=int)
    spectral_parser.add_argument("--partition", help="file with one block per line")
    spectral_parser.add_argument("--tol", type=float)
    return parser


def parameters_from_args(parsed_args: Any) -> Parameters:
    """
    Layer the parameter file, the command's flags and the ``-p`` overrides, in that order.
    """
    params = (
        YAMLParametersLoader().load(parsed_args.param_file)
        if parsed_args.param_file
        else Parameters.empty()
    )
    flags: Dict[str, Any] = {
        name: parameter_value(value)
        for (name, value) in vars(parsed_args).items()
        if name not in _NOT_PARAMETERS and value is not None
    }
    flags["command"] = parsed_args.command
    if parsed_args.log_level:
        flags["logging"] = {"root_level": parsed_args.log_level}
    params = params.unify(flags)
    if parsed_args.p:
        params = params.unify(Parameters.from_command_line_overrides(parsed_args.p))
    return params


def run(args: Sequence[str]) -> int:
    parsed_args = build_parser().parse_args(args)
    try:
        params = parameters_from_args(parsed_args)
        configure_logging_from(params)
        command = params.enum("command", Command)
    except ParameterError as e:
        log.error("%s", e)
        return ExitCode.ERROR
    log.info("Running %s with parameters:\n%s", command.value, params)
    return run_reporting_errors(_MAINS[command], params)


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
