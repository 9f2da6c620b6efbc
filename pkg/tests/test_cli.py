import json
import logging
from pathlib import Path

from satgraph.budgets import BUDGET_ENVIRONMENT_VARIABLE
from satgraph.cli import build_parser, main, parameters_from_args, run
from satgraph.run_config import ExitCode

import pytest

K_MINUS_3 = "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n"


@pytest.fixture(autouse=True)
def isolate(monkeypatch):
    monkeypatch.delenv(BUDGET_ENVIRONMENT_VARIABLE, raising=False)
    root = logging.getLogger()
    (level, handlers) = (root.level, list(root.handlers))
    yield
    root.setLevel(level)
    root.handlers = handlers


def test_construct_to_stdout(capsys):
    assert ExitCode.OK == run(["construct", "--kind", "kminus", "--k", "3"])
    assert capsys.readouterr().out == K_MINUS_3


def test_parameter_file_flags_and_overrides(tmp_path: Path, capsys):
    param_file = tmp_path / "construct.params"
    param_file.write_text("kind: kminus\nk: 3\n", encoding="utf-8")

    assert ExitCode.OK == run(["--param-file", str(param_file), "construct"])
    assert capsys.readouterr().out == K_MINUS_3

    # flags win over the file
    assert ExitCode.OK == run(["--param-file", str(param_file), "construct", "--k", "4"])
    assert capsys.readouterr().out.startswith("5 9\n")

    # and -p wins over flags
    assert ExitCode.OK == run(
        ["--param-file", str(param_file), "-p", "k", "2", "construct", "--k", "4"]
    )
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_verify_from_constructed_file(tmp_path: Path, capsys):
    graph_file = tmp_path / "g_3_8.txt"
    assert ExitCode.OK == run(
        ["construct", "--kind", "gkn", "--k", "3", "--n", "8", "--out", str(graph_file)]
    )
    assert (tmp_path / "g_3_8.layout.json").is_file()
    capsys.readouterr()

    assert ExitCode.OK == run(["verify", str(graph_file), "--k", "3"])
    assert json.loads(capsys.readouterr().out)["verdict"] == "saturated"
    assert ExitCode.MISSES_EDGE == run(
        ["verify", str(graph_file), "--k", "3", "--family", "vertex"]
    )


def test_search_and_budget(capsys):
    assert ExitCode.OK == run(["search", "--n", "5", "--k", "3"])
    assert json.loads(capsys.readouterr().out)["value"] == 7
    assert ExitCode.BUDGET_EXCEEDED == run(["search", "--n", "6", "--k", "3", "--budget", "5"])


def test_parameter_errors(capsys):
    assert ExitCode.ERROR == run(["construct", "--kind", "gkn", "--k", "2", "--n", "5"])
    assert ExitCode.ERROR == run(["table", "--k", "3", "--n", "4-6"])
    assert "Invalid value 2 for integer parameter k" in capsys.readouterr().err


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["construct", "--kind", "petersen"],
        ["search", "--n", "five"],
        ["table", "--family", "vertex"],
    ],
)
def test_usage_errors_exit_with_one(args):
    with pytest.raises(SystemExit) as exit_info:
        run(args)
    assert exit_info.value.code == ExitCode.ERROR


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        run(["--version"])
    assert exit_info.value.code == 0
    assert capsys.readouterr().out.strip() == "satgraph 0.1.0"


def test_main_exits_with_the_run_code(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["construct", "--kind", "kminus", "--k", "2"])
    assert exit_info.value.code == ExitCode.OK
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_log_level():
    assert ExitCode.OK == run(["--log-level", "DEBUG", "construct", "--kind", "kminus", "--k", "2"])
    assert logging.getLogger().level == logging.DEBUG


def test_parameters_from_args():
    parsed = build_parser().parse_args(
        ["--log-level", "WARNING", "table", "--k", "3", "--n", "4..6"]
    )
    params = parameters_from_args(parsed)
    assert params.as_nested_dicts() == {
        "command": "table",
        "k": 3,
        "n_range": "4..6",
        "logging": {"root_level": "WARNING"},
    }
