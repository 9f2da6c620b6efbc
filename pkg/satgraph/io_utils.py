"""
Reading and writing graphs, partitions and reports.

`CharSource` reads text from a file. `CharSink` writes text to a file or to a string buffer,
which is how parameters are rendered for the log.
"""
import io
import json
import sys
from abc import ABCMeta, abstractmethod
from pathlib import Path
from typing import Any, Optional, Sequence, TextIO, Tuple, Union, cast

from attr import attrib, attrs, validators

from satgraph.graph import Graph, GraphBuilder
from satgraph.misc_utils import pathify, significant_digits


class EdgeListFormatError(ValueError):
    """
    Raised when an edge-list file cannot be parsed.
    """


class PartitionFormatError(ValueError):
    """
    Raised when a partition file cannot be parsed.
    """


class CharSource(metaclass=ABCMeta):
    """
    Something which can provide string data.

    This should be viewed as more analogous to a `Path` object than to a file.
    You can get a file-like object from this by using `open` with a context manager.
    """

    @abstractmethod
    def open(self) -> TextIO:
        raise NotImplementedError()

    def read_all(self) -> str:
        with self.open() as file_like:
            return file_like.read()

    @staticmethod
    def from_file(p: Union[str, Path]) -> "CharSource":
        """
        Get a source whose content is that of the given file, read as UTF-8.
        """
        return _FileCharSource(pathify(p))


@attrs(slots=True, frozen=True)
class _FileCharSource(CharSource):
    _path = attrib(validator=validators.instance_of(Path))

    def open(self) -> TextIO:
        return open(self._path, "r", encoding="utf-8")

    def __str__(self) -> str:
        return str(self._path)


class CharSink(metaclass=ABCMeta):
    """
    Something which can accept string data.

    You can get a file-like object from this by using `open` with a context manager.
    """

    @abstractmethod
    def open(self) -> TextIO:
        raise NotImplementedError()

    @staticmethod
    def to_file(p: Union[Path, str]) -> "CharSink":
        """
        Get a sink which writes to the given path, creating parent directories as needed.
        """
        p = pathify(p)
        if p.parent:
            p.parent.mkdir(parents=True, exist_ok=True)
        return _FileCharSink(p)

    @staticmethod
    def to_string() -> "StringCharSink":
        """
        Gets a sink which writes to a string buffer.

        See `StringCharSink` for how to retrieve what has been written.
        """
        return StringCharSink()

    def write(self, data: str) -> None:
        """
        Write the given data to the sink, replacing anything written before.
        """
        with self.open() as out:
            out.write(data)


class StringCharSink(CharSink):
    """
    A sink which writes to a string buffer.

    The last string written can be recovered from the 'last_string_written' field.
    """

    def __init__(self) -> None:
        self.last_string_written: Optional[str] = None

    def open(self) -> TextIO:
        outer_self = self

        class StringFileLike(io.StringIO):
            def __exit__(self, exc_type, exc_val, exc_tb):
                outer_self.last_string_written = self.getvalue()
                super().__exit__(exc_type, exc_val, exc_tb)

        return StringFileLike()


@attrs(slots=True, frozen=True)
class _FileCharSink(CharSink):
    _path: Path = attrib(validator=validators.instance_of(Path))

    def open(self) -> TextIO:
        # newline="" so edge lists are byte-identical across platforms
        return cast(TextIO, self._path.open(mode="w", encoding="ascii", newline=""))


def edge_list_string(g: Graph) -> str:
    """
    The canonical edge-list text of *g*.

    The first line is ``n m``; each following line is an edge ``u v`` with ``u < v``, in
    lexicographic order. Every line, including the last, ends with a newline.
    """
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for (u, v) in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, *, source_name: str = "<string>") -> Graph:
    """
    Parse an edge list in the format written by `edge_list_string`.

    The reader is lenient about the order of pairs and about duplicates, but the number of
    edge lines must match the header. Blank lines are ignored.
    """
    lines = [
        (line_num, line.split())
        for (line_num, line) in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not lines:
        raise EdgeListFormatError(f"{source_name}: empty edge list; expected a 'n m' header")
    (header_line_num, header) = lines[0]
    (n, m) = _parse_int_pair(header, source_name, header_line_num)
    if len(lines) - 1 != m:
        raise EdgeListFormatError(
            f"{source_name}: header declares {m} edges but {len(lines) - 1} edge lines follow"
        )
    try:
        builder = GraphBuilder(n)
    except ValueError as e:
        raise EdgeListFormatError(f"{source_name}: bad vertex count {n}: {e}") from e
    for (line_num, fields) in lines[1:]:
        (u, v) = _parse_int_pair(fields, source_name, line_num)
        try:
            builder.add_edge(u, v)
        except ValueError as e:
            raise EdgeListFormatError(f"{source_name}:{line_num}: {e}") from e
    return builder.build()


def read_edge_list(source: CharSource) -> Graph:
    return parse_edge_list(source.read_all(), source_name=str(source))


def _parse_int_pair(fields: Sequence[str], source_name: str, line_num: int) -> Tuple[int, int]:
    if len(fields) != 2:
        raise EdgeListFormatError(
            f"{source_name}:{line_num}: expected two integers but got {' '.join(fields)!r}"
        )
    try:
        (first, second) = (int(fields[0]), int(fields[1]))
    except ValueError as e:
        raise EdgeListFormatError(
            f"{source_name}:{line_num}: expected two integers but got {' '.join(fields)!r}"
        ) from e
    if first < 0 or second < 0:
        raise EdgeListFormatError(
            f"{source_name}:{line_num}: negative values are not allowed"
        )
    return (first, second)


def parse_partition_blocks(
    text: str, *, source_name: str = "<string>"
) -> Tuple[Tuple[int, ...], ...]:
    """
    Parse a partition file: one line per block, each a space-separated list of vertices.

    Blank lines are ignored. Whether the blocks actually partition a graph's vertex set is
    checked by `satgraph.spectral.Partition`, not here.
    """
    blocks = []
    for (line_num, line) in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            blocks.append(tuple(int(field) for field in line.split()))
        except ValueError as e:
            raise PartitionFormatError(
                f"{source_name}:{line_num}: expected vertex indices but got {line!r}"
            ) from e
    if not blocks:
        raise PartitionFormatError(f"{source_name}: a partition needs at least one block")
    return tuple(blocks)


def read_partition_blocks(source: CharSource) -> Tuple[Tuple[int, ...], ...]:
    return parse_partition_blocks(source.read_all(), source_name=str(source))


def json_string(obj: Any) -> str:
    """
    Render *obj* as JSON, rounding every float to 12 significant digits.
    """
    return json.dumps(_round_floats(obj), indent=2) + "\n"


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        return significant_digits(obj)
    if isinstance(obj, dict):
        return {key: _round_floats(value) for (key, value) in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(item) for item in obj]
    return obj


def layout_path_for(edge_list_path: Path) -> Path:
    """
    Where the block layout of a constructed graph is written next to its edge list.
    """
    return edge_list_path.with_name(edge_list_path.stem + ".layout.json")


def emit(text: str, out: Optional[Path] = None) -> None:
    """
    Write command output to *out*, or to standard output if *out* is `None`.
    """
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        CharSink.to_file(out).write(text)
