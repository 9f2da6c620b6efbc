import logging
from enum import Enum
from pathlib import Path
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    MutableMapping,
    Optional,
    Sequence,
    Tuple,
    Type,
    TypeVar,
    Union,
)

from attr import attrib, attrs

from immutablecollections import ImmutableDict, immutabledict

from satgraph.io_utils import CharSink
from satgraph.preconditions import check_arg, check_isinstance

import yaml

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


class ParameterError(Exception):
    pass


_ParamType = TypeVar("_ParamType")  # pylint:disable=invalid-name
_EnumType = TypeVar("_EnumType", bound=Enum)


def _to_tuple(val: Iterable[str]) -> Tuple[str, ...]:
    return tuple(val)


@attrs(frozen=True, slots=True)
class Parameters:
    """
    Configuration parameters for a program.

    A `Parameters` object can be thought of as a hierarchical dictionary mapping parameter name
    strings to arbitrary values. Hierarchical levels within a parameter name are separated by
    `.`; the levels are called namespaces. So `search.workers` means "look up the 'workers'
    parameter within the namespace 'search'".

    The typed accessors validate values as they are looked up, so that a bad configuration
    fails before any computation starts.

    You can check if a lookup of a parameter would be successful using the `in` operator.
    """

    _data: ImmutableDict[str, Any] = attrib(
        default=immutabledict(), converter=immutabledict
    )
    namespace_prefix: Tuple[str, ...] = attrib(
        default=tuple(), converter=_to_tuple, kw_only=True
    )

    def __attrs_post_init__(self) -> None:
        for key in self._data:
            check_arg(
                "." not in key, "Parameter keys cannot contain namespace separator '.'"
            )

    @staticmethod
    def empty(*, namespace_prefix: Iterable[str] = tuple()) -> "Parameters":
        return Parameters.from_mapping({}, namespace_prefix=namespace_prefix)

    @staticmethod
    def from_mapping(
        mapping: Mapping, *, namespace_prefix: Iterable[str] = tuple()
    ) -> "Parameters":
        """
        Convert a dictionary of dictionaries into a `Parameters`.

        Each mapping-valued entry becomes a namespace.
        """
        check_isinstance(mapping, Mapping)
        ret: List[Tuple[str, Any]] = []
        for (key, val) in mapping.items():
            if isinstance(val, Mapping):
                sub_namespace_prefix = list(namespace_prefix)
                sub_namespace_prefix.append(key)
                ret.append(
                    (key, Parameters.from_mapping(val, namespace_prefix=sub_namespace_prefix))
                )
            else:
                # this case is also hit if the value is already a `Parameters`
                ret.append((key, val))
        return Parameters(ret, namespace_prefix=namespace_prefix)

    @staticmethod
    def from_key_value_pairs(
        kv_pairs: Iterable[Tuple[str, Any]], namespace_separator: str = "."
    ) -> "Parameters":
        """
        Creates a `Parameters` from key-value pairs.

        Keys containing *namespace_separator* produce nested namespaces.
        """
        ret: MutableMapping[str, Any] = {}
        for (k, v) in kv_pairs:
            if not k:
                raise ParameterError("Parameter names cannot be the empty string")
            key_parts = k.split(namespace_separator)
            to_set_dict = ret
            for key_part in key_parts[:-1]:
                to_set_dict = to_set_dict.setdefault(key_part, {})
            to_set_dict[key_parts[-1]] = v
        return Parameters.from_mapping(ret)

    @staticmethod
    def from_command_line_overrides(kv_pairs: Iterable[Sequence[str]]) -> "Parameters":
        """
        Creates a `Parameters` from ``-p name value`` pairs.

        Each value is read as a YAML scalar, so ``-p k 3`` gives the integer 3 and
        ``-p family edge`` the string ``"edge"``.
        """
        parsed = []
        for (name, value) in kv_pairs:
            try:
                parsed.append((name, yaml.safe_load(value)))
            except yaml.YAMLError as e:
                raise ParameterError(
                    f"Could not parse value {value!r} for parameter {name}"
                ) from e
        return Parameters.from_key_value_pairs(parsed)

    def as_nested_dicts(self) -> Dict[str, Any]:
        """
        A nested dictionary representing this `Parameters`.
        """
        return {
            key: val.as_nested_dicts() if isinstance(val, Parameters) else val
            for (key, val) in self._data.items()
        }

    def unify(
        self,
        new_params: Union[Mapping[Any, Any], "Parameters"],
        *,
        namespace_prefix: Sequence[str] = tuple(),
    ) -> "Parameters":
        """
        Get a new `Parameters` holding everything in this one and in *new_params*.

        Where both set the same parameter, the value from *new_params* wins. A name which is a
        namespace on one side and a plain parameter on the other is a `ParameterError`.
        """
        if not isinstance(new_params, Parameters):
            new_params = Parameters.from_mapping(new_params)

        ret: Dict[str, Any] = dict()
        for (key, old_val) in self._data.items():
            if key in new_params:
                new_val = new_params._data[key]  # pylint:disable=protected-access
                if isinstance(old_val, Parameters) != isinstance(new_val, Parameters):
                    param_str = ".".join((*namespace_prefix, key))
                    raise ParameterError(
                        f"When unifying parameters, {param_str} is a parameter on one side "
                        f"and a namespace on the other"
                    )
                elif isinstance(old_val, Parameters):
                    ret[key] = old_val.unify(
                        new_val, namespace_prefix=(*namespace_prefix, key)
                    )
                else:
                    ret[key] = new_val
            else:
                ret[key] = old_val

        for (key, new_val) in new_params._data.items():  # pylint:disable=protected-access
            if key not in self:
                ret[key] = new_val

        return Parameters.from_mapping(ret, namespace_prefix=namespace_prefix)

    def creatable_file(self, param: str) -> Path:
        """
        Get a file path which can be written to.

        The parent directories of the path are created if they do not exist.
        """
        ret = Path(self.string(param)).resolve()
        ret.parent.mkdir(parents=True, exist_ok=True)
        return ret

    def optional_creatable_file(self, param: str) -> Optional[Path]:
        if param in self:
            return self.creatable_file(param)
        return None

    def existing_file(self, param: str) -> Path:
        """
        Gets a path for an existing file.

        Throws a `ParameterError` if the path does not exist or is not a file.
        """
        ret = Path(self.string(param)).resolve()
        if not ret.exists():
            raise ParameterError(
                f"For parameter {param}, expected an existing file but got non-existent {ret}"
            )
        if not ret.is_file():
            raise ParameterError(
                f"For parameter {param}, expected an existing file but got existing "
                f"non-file {ret}"
            )
        return ret

    def optional_existing_file(self, param: str) -> Optional[Path]:
        if param in self:
            return self.existing_file(param)
        return None

    def enum(
        self,
        param_name: str,
        enum_class: Type[_EnumType],
        *,
        default: Optional[_EnumType] = None,
    ) -> _EnumType:
        """
        Gets a member of *enum_class*.

        The parameter may give either the member's name (case-insensitively) or its value.
        """
        if param_name not in self and default is not None:
            return default
        raw = self.string(param_name)
        for member in enum_class:
            if raw == member.value or raw.upper() == member.name:
                return member
        raise ParameterError(
            f"For parameter {param_name}, {raw} could not be found in "
            f"{[member.value for member in enum_class]}"
        )

    def string(
        self,
        param_name: str,
        valid_options: Optional[Iterable[str]] = None,
        default: Optional[str] = None,
    ) -> str:
        """
        Gets a string-valued parameter.

        Throws a `ParameterError` if `param` is not a known parameter.
        """
        ret = self.get(param_name, str, default=default)
        if valid_options is not None and ret not in valid_options:
            raise ParameterError(
                f"The value {ret} for the parameter {param_name} is not one of the valid "
                f"options {tuple(valid_options)}"
            )
        return ret

    def __contains__(self, param_name: str) -> bool:
        return self._private_get(param_name, optional=True) is not None

    def namespace(self, name: str) -> "Parameters":
        """
        Get the namespace with the given name.
        """
        return self.get(name, Parameters)

    def integer(
        self,
        name: str,
        *,
        default: Optional[int] = None,
        min_value: Optional[int] = None,
        max_value: Optional[int] = None,
    ) -> int:
        """
        Gets an integer parameter, optionally checking it lies in ``[min_value, max_value]``.
        """
        ret = self.get(name, int, default=default)
        if isinstance(ret, bool):
            raise ParameterError(f"For parameter {name}, expected an integer but got {ret}")
        if (min_value is not None and ret < min_value) or (
            max_value is not None and ret > max_value
        ):
            raise ParameterError(
                f"Invalid value {ret} for integer parameter {name}. Expected a value in "
                f"[{'-inf' if min_value is None else min_value}, "
                f"{'inf' if max_value is None else max_value}]."
            )
        return ret

    def optional_integer(
        self,
        name: str,
        *,
        min_value: Optional[int] = None,
        max_value: Optional[int] = None,
    ) -> Optional[int]:
        if name in self:
            return self.integer(name, min_value=min_value, max_value=max_value)
        return None

    def floating_point(
        self,
        name: str,
        *,
        default: Optional[float] = None,
        min_value: Optional[float] = None,
        max_value: Optional[float] = None,
    ) -> float:
        """
        Gets a float parameter.

        Integers are accepted. So are strings in exponent notation, since YAML reads
        ``1e-10`` (with no decimal point) as a string.

        This method isn't called `float` to avoid a clash with the Python type.
        """
        raw = self.get(name, object, default=default)
        if isinstance(raw, bool):
            raise ParameterError(f"For parameter {name}, expected a float but got {raw}")
        try:
            ret = float(raw)  # type: ignore
        except (TypeError, ValueError) as e:
            raise ParameterError(
                f"For parameter {name}, expected a float but got {raw!r}"
            ) from e
        if (min_value is not None and ret < min_value) or (
            max_value is not None and ret > max_value
        ):
            raise ParameterError(
                f"For parameter {name}, expected a float in the range "
                f"[{min_value}, {max_value}] but got {ret}"
            )
        return ret

    def get(
        self,
        param_name: str,
        param_type: Type[_ParamType],
        default: Optional[_ParamType] = None,
    ) -> _ParamType:
        """
        Get a parameter with type-safety.

        Throws a `ParameterError` if the parameter is unknown or not of the specified type.
        """
        ret = self._private_get(param_name, default=default)
        if isinstance(ret, param_type):
            return ret
        raise ParameterError(
            f"{self._namespace_message()}When looking up parameter '{param_name}', "
            f"expected a value of type {param_type}, but got {ret} of type {type(ret)}"
        )

    def assert_at_most_one_present(self, param_names: Iterable[str]) -> None:
        param_names = tuple(param_names)
        params_present = [param for param in param_names if param in self]
        if len(params_present) > 1:
            raise ParameterError(
                f"At most one of {param_names} can be specified but "
                f"these were specified: {params_present}"
            )

    def _private_get(
        self, param_name: str, *, optional: bool = False, default: Optional[Any] = None
    ) -> Any:
        check_arg(isinstance(param_name, str))
        # pylint:disable=protected-access
        param_components = param_name.split(".")
        check_arg(all(param_components), "Parameter name %s is malformed", (param_name,))

        current: Any = self
        namespaces_processed: List[str] = []
        for param_component in param_components:
            if not isinstance(current, Parameters):
                if default is not None:
                    return default
                if optional:
                    return None
                raise ParameterError(
                    f"{self._namespace_message()}When getting parameter {param_name} "
                    f"expected {'.'.join(namespaces_processed)} to be a map, but it is a "
                    f"leaf: {current}"
                )
            if param_component in current._data:
                current = current._data[param_component]
                namespaces_processed.append(param_component)
            elif default is not None:
                return default
            elif optional:
                return None
            else:
                context_string = (
                    "in context " + ".".join(namespaces_processed)
                    if namespaces_processed
                    else "in root context"
                )
                available_parameters = [
                    key
                    for (key, val) in current._data.items()
                    if not isinstance(val, Parameters)
                ]
                available_namespaces = [
                    key for (key, val) in current._data.items() if isinstance(val, Parameters)
                ]
                raise ParameterError(
                    f"{self._namespace_message()}Parameter {param_name} not found. In "
                    f"{context_string} available parameters are {available_parameters}, "
                    f"available namespaces are {available_namespaces}"
                )
        return current

    def __str__(self) -> str:
        str_sink = CharSink.to_string()
        YAMLParametersWriter().write(self, str_sink)
        return str_sink.last_string_written

    def _namespace_message(self) -> str:
        if self.namespace_prefix:
            return f"In namespace {'.'.join(self.namespace_prefix)}: "
        return ""


@attrs(frozen=True)
class YAMLParametersLoader:
    """
    Loads `Parameters` from YAML.

    The YAML must be a mapping at the top level, all of its keys must be strings, and every
    non-leaf value must itself be a mapping.
    """

    def load(self, f: Union[str, Path]) -> Parameters:
        path = Path(f)
        try:
            content = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ParameterError(f"Could not read parameter file {path}") from e
        return self._load_from_string(content, error_string=str(path))

    def _load_from_string(self, content: str, *, error_string: str) -> Parameters:
        try:
            raw_yaml = yaml.safe_load(content)
        except yaml.YAMLError as e:
            raise ParameterError(f"Failure while loading parameter file {error_string}") from e
        if raw_yaml is None:
            return Parameters.empty()
        if not isinstance(raw_yaml, Mapping):
            raise ParameterError(
                f"Parameters YAML files must be mappings at the top level: {error_string}"
            )
        self._check_all_keys_strings(raw_yaml, error_string)
        return Parameters.from_mapping(raw_yaml)

    @staticmethod
    def _check_all_keys_strings(
        mapping: Mapping, error_string: str, path: Tuple[str, ...] = tuple()
    ) -> None:
        for (key, val) in mapping.items():
            if not isinstance(key, str):
                raise ParameterError(
                    f"Parameter keys must be strings, but got {key!r} at "
                    f"{'.'.join(path) or 'top level'} in {error_string}"
                )
            if isinstance(val, Mapping):
                YAMLParametersLoader._check_all_keys_strings(val, error_string, (*path, key))


@attrs(frozen=True)
class YAMLParametersWriter:
    def write(self, params: Parameters, sink: Union[Path, str, CharSink]) -> None:
        if isinstance(sink, (Path, str)):
            sink = CharSink.to_file(sink)
        with sink.open() as out:
            yaml.dump(
                self._preprocess_dicts(params.as_nested_dicts()),
                out,
                # keeps leaf dictionaries out of the compact flow style
                default_flow_style=False,
                indent=4,
                width=78,
                sort_keys=False,
            )

    def _preprocess_dicts(self, param_node: Any) -> Any:
        r"""
        Ensure that `Path`\ s and enum members are written as plain strings.
        """
        if isinstance(param_node, Path):
            return str(param_node)
        elif isinstance(param_node, Enum):
            return param_node.value
        elif isinstance(param_node, Mapping):
            return {k: self._preprocess_dicts(v) for (k, v) in param_node.items()}
        elif isinstance(param_node, (str, int, float)) or param_node is None:
            return param_node
        elif isinstance(param_node, (bytes, bytearray)):
            raise ParameterError("bytes and bytearrays are not legal parameter values")
        elif isinstance(param_node, Sequence):
            return [self._preprocess_dicts(item) for item in param_node]
        raise ParameterError(
            f"Don't know how to serialize out {param_node} as a parameter value"
        )
