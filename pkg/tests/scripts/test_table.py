from pathlib import Path

from satgraph.budgets import BUDGET_ENVIRONMENT_VARIABLE
from satgraph.parameters import Parameters
from satgraph.run_config import Command, ExitCode, RunConfig
from satgraph.scripts import table

import pytest

EXPECTED_K_3 = (
    "n,rho_formula,sat_searched,ex_formula,ex_searched,gap\n"
    "4,5,5,5,5,0\n"
    "5,7,7,7,7,0\n"
    "6,9,9,9,9,0\n"
    "7,11,,11,,0\n"
)


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv(BUDGET_ENVIRONMENT_VARIABLE, raising=False)


def test_table_leaves_searches_beyond_the_budget_blank(capsys):
    assert ExitCode.OK == table.main(
        Parameters.from_mapping({"k": 3, "n_range": "4..7", "budget": 6})
    )
    assert capsys.readouterr().out == EXPECTED_K_3


def test_table_to_file(tmp_path: Path):
    out = tmp_path / "tables" / "k2.csv"
    assert ExitCode.OK == table.main(
        Parameters.from_mapping({"k": 2, "n_range": [3, 5], "out": str(out)})
    )
    assert out.read_text().splitlines() == [
        ",".join(table.COLUMNS),
        "3,2,2,2,2,0",
        "4,3,3,3,3,0",
        "5,4,4,4,4,0",
    ]


def test_gap_without_searching():
    config = RunConfig.from_parameters(
        Parameters.from_mapping({"k": 4, "n_range": "10..12", "budget": 0}), Command.TABLE
    )
    rows = table.table_rows(config)
    assert [row["gap"] for row in rows] == [3, 3, 3]
    assert all(row["sat_searched"] == "" and row["ex_searched"] == "" for row in rows)


@pytest.mark.slow
def test_first_gap_for_k_3(capsys):
    assert ExitCode.OK == table.main(Parameters.from_mapping({"k": 3, "n_range": "8..8"}))
    assert capsys.readouterr().out.splitlines()[1] == "8,12,12,13,13,1"
