import json
from pathlib import Path

from satgraph.budgets import BUDGET_ENVIRONMENT_VARIABLE, BudgetExceededError
from satgraph.parameters import Parameters
from satgraph.run_config import ExitCode
from satgraph.scripts import search

import pytest


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv(BUDGET_ENVIRONMENT_VARIABLE, raising=False)


def test_sat_search(capsys):
    assert ExitCode.OK == search.main(Parameters.from_mapping({"n": 7, "k": 3}))
    output = json.loads(capsys.readouterr().out)
    assert (output["n"], output["k"], output["family"], output["mode"]) == (7, 3, "edge", "sat")
    assert output["value"] == 11
    assert output["expected_value"] == 11
    assert output["matches_formula"]
    assert output["witnesses"]
    assert "extremal_structure" not in output
    assert output["elapsed_ms"] >= 0.0


def test_ex_search_to_file(tmp_path: Path):
    out = tmp_path / "ex_6_2.json"
    assert ExitCode.OK == search.main(
        Parameters.from_mapping({"n": 6, "k": 2, "mode": "ex", "out": str(out)})
    )
    output = json.loads(out.read_text())
    assert output["value"] == 5
    assert output["extremal_structure"] is True
    # the six trees on six vertices
    assert len(output["witnesses"]) == 6


def test_vertex_family(capsys):
    assert ExitCode.OK == search.main(
        Parameters.from_mapping({"n": 5, "k": 3, "family": "vertex"})
    )
    assert json.loads(capsys.readouterr().out)["value"] == 7


def test_worker_count_does_not_change_the_result(capsys):
    search.main(Parameters.from_mapping({"n": 6, "k": 3, "mode": "ex"}))
    sequential = json.loads(capsys.readouterr().out)
    search.main(Parameters.from_mapping({"n": 6, "k": 3, "mode": "ex", "workers": 2}))
    parallel = json.loads(capsys.readouterr().out)
    # only the timing may differ
    assert parallel.pop("elapsed_ms") >= 0.0
    sequential.pop("elapsed_ms")
    assert parallel == sequential


def test_budget_is_enforced(monkeypatch):
    with pytest.raises(BudgetExceededError):
        search.main(Parameters.from_mapping({"n": 7, "k": 3, "budget": 6}))
    monkeypatch.setenv(BUDGET_ENVIRONMENT_VARIABLE, "5")
    with pytest.raises(BudgetExceededError):
        search.main(Parameters.from_mapping({"n": 6, "k": 3}))
