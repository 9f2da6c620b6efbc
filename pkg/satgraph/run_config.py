"""
Validated settings for one command-line run.

Every command reads its settings from a flat `Parameters` (built from a YAML file, ``-p``
overrides and command-line flags) through `RunConfig.from_parameters`, which rejects bad
values and flags the command does not take before anything is computed.
"""
import re
from enum import Enum, IntEnum
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from attr import attrib, attrs, validators

from satgraph.parameters import ParameterError, Parameters
from satgraph.saturation import Family, SearchMode
from satgraph.spectral import DEFAULT_TOLERANCE


class ExitCode(IntEnum):
    """
    Process exit codes of the command-line tools.
    """

    OK = 0
    ERROR = 1
    CONTAINS_MEMBER = 2
    MISSES_EDGE = 3
    BUDGET_EXCEEDED = 4
    NOT_EQUITABLE = 5
    FORMULA_MISMATCH = 6


class Command(Enum):
    CONSTRUCT = "construct"
    VERIFY = "verify"
    SEARCH = "search"
    TABLE = "table"
    SPECTRAL = "spectral"


class ConstructionKind(Enum):
    GKN = "gkn"
    SPLIT = "split"
    KMINUS = "kminus"
    KTREE = "ktree"

    @property
    def min_k(self) -> int:
        """
        The least k the builder of this kind accepts.
        """
        return _MIN_K[self]


# a k-tree for level k is a (k-1)-tree
_MIN_K = {
    ConstructionKind.GKN: 3,
    ConstructionKind.SPLIT: 1,
    ConstructionKind.KMINUS: 2,
    ConstructionKind.KTREE: 2,
}


class OutputFormat(Enum):
    EDGELIST = "edgelist"
    JSON = "json"


# the parameters each command accepts; anything else given to it is an error
_ACCEPTED = {
    Command.CONSTRUCT: ("kind", "k", "n", "seed", "out", "format"),
    Command.VERIFY: ("input", "k", "family", "budget"),
    Command.SEARCH: ("n", "k", "family", "mode", "workers", "budget", "out"),
    Command.TABLE: ("k", "n_range", "family", "workers", "budget", "out"),
    Command.SPECTRAL: ("input", "k", "partition", "tol"),
}

# names which are not command parameters
_RESERVED = ("command", "logging")

_RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def _parse_n_range(params: Parameters) -> Tuple[int, int]:
    raw = params.get("n_range", object)
    if isinstance(raw, str):
        match = _RANGE_PATTERN.match(raw)
        if not match:
            raise ParameterError(f"Expected n_range of the form A..B but got {raw!r}")
        ret = (int(match.group(1)), int(match.group(2)))
    elif (
        isinstance(raw, list)
        and len(raw) == 2
        and all(isinstance(x, int) and not isinstance(x, bool) for x in raw)
    ):
        ret = (raw[0], raw[1])
    else:
        raise ParameterError(f"Expected n_range of the form A..B but got {raw!r}")
    if ret[0] > ret[1]:
        raise ParameterError(f"n_range {ret[0]}..{ret[1]} is empty")
    return ret


@attrs(frozen=True, slots=True, kw_only=True)
class RunConfig:
    """
    The settings of one run of *command*.

    Fields a command does not use are `None`.
    """

    command: Command = attrib(validator=validators.instance_of(Command))
    kind: Optional[ConstructionKind] = attrib(default=None)
    k: Optional[int] = attrib(default=None)
    n: Optional[int] = attrib(default=None)
    n_range: Optional[Tuple[int, int]] = attrib(default=None)
    seed: Optional[int] = attrib(default=None)
    family: Family = attrib(default=Family.EDGE, validator=validators.instance_of(Family))
    mode: SearchMode = attrib(
        default=SearchMode.SAT, validator=validators.instance_of(SearchMode)
    )
    workers: int = attrib(default=1, validator=validators.instance_of(int))
    budget: Optional[int] = attrib(default=None)
    input: Optional[Path] = attrib(default=None)
    partition: Optional[Path] = attrib(default=None)
    tol: float = attrib(default=DEFAULT_TOLERANCE, converter=float)
    out: Optional[Path] = attrib(default=None)
    output_format: OutputFormat = attrib(
        default=OutputFormat.EDGELIST, validator=validators.instance_of(OutputFormat)
    )

    def n_values(self) -> List[int]:
        if self.n_range is None:
            raise ParameterError(f"{self.command.value} has no n_range")
        return list(range(self.n_range[0], self.n_range[1] + 1))

    @staticmethod
    def from_parameters(params: Parameters, command: Optional[Command] = None) -> "RunConfig":
        """
        Build and validate the settings for *command* (by default, the ``command``
        parameter).

        Raises `ParameterError` for missing, ill-typed or out-of-range values and for
        parameters *command* does not accept.
        """
        if command is None:
            command = params.enum("command", Command)
        _check_no_foreign_parameters(params, command, frozenset(_ACCEPTED[command]))
        params.assert_at_most_one_present(("n", "n_range"))

        fields: Dict[str, Any] = {"command": command}
        if command is Command.CONSTRUCT:
            kind = params.enum("kind", ConstructionKind)
            fields["kind"] = kind
            fields["output_format"] = params.enum(
                "format", OutputFormat, default=OutputFormat.EDGELIST
            )
            fields["out"] = params.optional_creatable_file("out")
            if kind is ConstructionKind.KMINUS:
                fields["k"] = params.integer("k", min_value=kind.min_k)
                _reject_present(params, command, ("n", "seed"), "for kind kminus")
            else:
                fields["k"] = params.integer("k", min_value=kind.min_k)
                fields["n"] = params.integer("n", min_value=1)
                if kind is ConstructionKind.KTREE:
                    fields["seed"] = params.optional_integer("seed", min_value=0)
                else:
                    _reject_present(params, command, ("seed",), f"for kind {kind.value}")
        elif command is Command.VERIFY:
            fields["input"] = params.existing_file("input")
            fields["k"] = params.integer("k", min_value=1)
            fields["family"] = params.enum("family", Family, default=Family.EDGE)
            fields["budget"] = params.optional_integer("budget", min_value=0)
        elif command is Command.SEARCH:
            fields["n"] = params.integer("n", min_value=1)
            fields["k"] = params.integer("k", min_value=1)
            fields["family"] = params.enum("family", Family, default=Family.EDGE)
            fields["mode"] = params.enum("mode", SearchMode, default=SearchMode.SAT)
            fields["workers"] = params.integer("workers", default=1, min_value=1)
            fields["budget"] = params.optional_integer("budget", min_value=0)
            fields["out"] = params.optional_creatable_file("out")
        elif command is Command.TABLE:
            k = params.integer("k", min_value=2)
            n_range = _parse_n_range(params)
            if n_range[0] < k + 1:
                raise ParameterError(
                    f"Table rows start at n = k + 1 = {k + 1} but n_range starts at "
                    f"{n_range[0]}"
                )
            fields["k"] = k
            fields["n_range"] = n_range
            fields["family"] = params.enum("family", Family, default=Family.EDGE)
            if fields["family"] is not Family.EDGE:
                raise ParameterError("table compares the k-edge-connectivity formulas only")
            fields["workers"] = params.integer("workers", default=1, min_value=1)
            fields["budget"] = params.optional_integer("budget", min_value=0)
            fields["out"] = params.optional_creatable_file("out")
        else:
            fields["input"] = params.existing_file("input")
            fields["k"] = params.optional_integer("k", min_value=1)
            fields["partition"] = params.optional_existing_file("partition")
            fields["tol"] = params.floating_point(
                "tol", default=DEFAULT_TOLERANCE, min_value=0.0
            )
            if fields["tol"] <= 0:
                raise ParameterError(f"tol must be positive but got {fields['tol']}")
        return RunConfig(**fields)


def _check_no_foreign_parameters(
    params: Parameters, command: Command, accepted: FrozenSet[str]
) -> None:
    foreign = [
        name
        for (name, _) in params.as_nested_dicts().items()
        if name not in accepted and name not in _RESERVED
    ]
    if foreign:
        raise ParameterError(
            f"{command.value} does not take the parameters {sorted(foreign)}; it takes "
            f"{sorted(accepted)}"
        )


def _reject_present(
    params: Parameters, command: Command, names: Tuple[str, ...], context: str
) -> None:
    present = [name for name in names if name in params]
    if present:
        raise ParameterError(f"{command.value} does not take {present} {context}")


def parameter_value(value: Any) -> Any:
    """
    A command-line flag value as stored in `Parameters`.
    """
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    return value
