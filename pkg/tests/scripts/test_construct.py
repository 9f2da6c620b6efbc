import json
from pathlib import Path

from satgraph.constructions import rho
from satgraph.io_utils import CharSource, read_edge_list
from satgraph.parameters import Parameters
from satgraph.run_config import ExitCode
from satgraph.saturation import Family, is_saturated
from satgraph.scripts import construct

import pytest


def test_split_edge_list_to_stdout(capsys):
    assert ExitCode.OK == construct.main(
        Parameters.from_mapping({"kind": "split", "k": 3, "n": 5})
    )
    assert capsys.readouterr().out == "5 7\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n"


def test_split_for_k_one_is_edgeless(capsys):
    assert ExitCode.OK == construct.main(
        Parameters.from_mapping({"kind": "split", "k": 1, "n": 3})
    )
    assert capsys.readouterr().out == "3 0\n"


def test_gkn_writes_its_layout_next_to_the_edge_list(tmp_path: Path):
    out = tmp_path / "graphs" / "g_3_9.txt"
    assert ExitCode.OK == construct.main(
        Parameters.from_mapping({"kind": "gkn", "k": 3, "n": 9, "out": str(out)})
    )
    g = read_edge_list(CharSource.from_file(out))
    assert (g.n, g.m) == (9, rho(3, 9))
    assert is_saturated(g, 3, Family.EDGE).saturated

    layout = json.loads((tmp_path / "graphs" / "g_3_9.layout.json").read_text())
    assert (layout["t"], layout["r"]) == (2, 1)
    assert len(layout["blocks"]) == 2
    assert len(layout["tail"]) == 1


def test_json_format_includes_the_layout(capsys):
    assert ExitCode.OK == construct.main(
        Parameters.from_mapping({"kind": "gkn", "k": 4, "n": 10, "format": "json"})
    )
    output = json.loads(capsys.readouterr().out)
    assert (output["n"], output["m"]) == (10, rho(4, 10))
    assert len(output["edges"]) == output["m"]
    assert output["layout"]["k"] == 4


def test_k_minus_json_has_no_layout(capsys):
    assert ExitCode.OK == construct.main(
        Parameters.from_mapping({"kind": "kminus", "k": 3, "format": "json"})
    )
    output = json.loads(capsys.readouterr().out)
    assert output == {
        "n": 4,
        "m": 5,
        "edges": [[0, 1], [0, 2], [1, 2], [1, 3], [2, 3]],
    }


@pytest.mark.parametrize("seed", [0, 1, 17])
def test_ktree_is_seeded(tmp_path: Path, seed):
    first = tmp_path / "first.txt"
    second = tmp_path / "second.txt"
    for out in (first, second):
        construct.main(
            Parameters.from_mapping(
                {"kind": "ktree", "k": 3, "n": 6, "seed": seed, "out": str(out)}
            )
        )
    assert first.read_text() == second.read_text()
    assert first.read_text().startswith("6 9\n")
