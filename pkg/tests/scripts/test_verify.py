import json
from pathlib import Path

from satgraph.constructions import build_cycle, build_gkn
from satgraph.graph import Graph
from satgraph.io_utils import CharSink, edge_list_string
from satgraph.parameters import Parameters
from satgraph.run_config import ExitCode
from satgraph.scripts import verify

import pytest


def _write(g: Graph, path: Path) -> Path:
    CharSink.to_file(path).write(edge_list_string(g))
    return path


def test_saturated_graph_with_checks(tmp_path: Path, capsys):
    graph_file = _write(build_gkn(3, 8)[0], tmp_path / "g.txt")
    assert ExitCode.OK == verify.main(
        Parameters.from_mapping({"input": str(graph_file), "k": 3})
    )
    output = json.loads(capsys.readouterr().out)
    assert output["input"] == str(graph_file.resolve())
    assert (output["n"], output["m"], output["k"]) == (8, 12, 3)
    assert output["family"] == "edge"
    assert output["verdict"] == "saturated"
    assert set(output["checks"].values()) == {"pass"}


def test_missing_edge_for_the_vertex_family(tmp_path: Path, capsys):
    graph_file = _write(build_gkn(3, 8)[0], tmp_path / "g.txt")
    assert ExitCode.MISSES_EDGE == verify.main(
        Parameters.from_mapping({"input": str(graph_file), "k": 3, "family": "vertex"})
    )
    output = json.loads(capsys.readouterr().out)
    assert output["verdict"] == "misses-edge"
    assert output["missing_edge"] == [0, 5]
    assert "checks" not in output


def test_graph_containing_a_member(tmp_path: Path, capsys):
    graph_file = _write(build_cycle(5), tmp_path / "c5.txt")
    assert ExitCode.CONTAINS_MEMBER == verify.main(
        Parameters.from_mapping({"input": str(graph_file), "k": 2})
    )
    output = json.loads(capsys.readouterr().out)
    assert output["verdict"] == "contains-member"
    assert output["witness"]["vertices"] == [0, 1, 2, 3, 4]


def test_malformed_edge_list(tmp_path: Path):
    graph_file = tmp_path / "bad.txt"
    graph_file.write_text("3 2\n0 1\n", encoding="ascii")
    with pytest.raises(ValueError, match="header declares 2 edges"):
        verify.main(Parameters.from_mapping({"input": str(graph_file), "k": 2}))
