from pathlib import Path
from unittest import TestCase

from satgraph.parameters import ParameterError, Parameters
from satgraph.run_config import (
    Command,
    ConstructionKind,
    OutputFormat,
    RunConfig,
    parameter_value,
)
from satgraph.saturation import Family, SearchMode
from satgraph.spectral import DEFAULT_TOLERANCE

import pytest


def _config(command: Command, **params) -> RunConfig:
    return RunConfig.from_parameters(Parameters.from_mapping(params), command)


class TestConstructConfig(TestCase):
    def test_gkn(self):
        config = _config(Command.CONSTRUCT, kind="gkn", k=3, n=9)
        self.assertEqual(ConstructionKind.GKN, config.kind)
        self.assertEqual((3, 9), (config.k, config.n))
        self.assertEqual(OutputFormat.EDGELIST, config.output_format)
        self.assertIsNone(config.out)

    def test_kminus_takes_only_k(self):
        self.assertEqual(2, _config(Command.CONSTRUCT, kind="kminus", k=2).k)
        with self.assertRaisesRegex(
            ParameterError, r"construct does not take \['n'\] for kind kminus"
        ):
            _config(Command.CONSTRUCT, kind="kminus", k=3, n=4)

    def test_only_ktree_takes_a_seed(self):
        self.assertEqual(7, _config(Command.CONSTRUCT, kind="ktree", k=3, n=6, seed=7).seed)
        self.assertIsNone(_config(Command.CONSTRUCT, kind="ktree", k=3, n=6).seed)
        with self.assertRaisesRegex(ParameterError, "for kind split"):
            _config(Command.CONSTRUCT, kind="split", k=3, n=6, seed=7)

    def test_gkn_needs_k_at_least_three(self):
        with self.assertRaisesRegex(ParameterError, "Invalid value 2 for integer parameter k"):
            _config(Command.CONSTRUCT, kind="gkn", k=2, n=5)
        self.assertEqual(2, _config(Command.CONSTRUCT, kind="split", k=2, n=5).k)

    def test_split_takes_k_one(self):
        self.assertEqual(1, _config(Command.CONSTRUCT, kind="split", k=1, n=3).k)
        with self.assertRaisesRegex(ParameterError, "Invalid value 1 for integer parameter k"):
            _config(Command.CONSTRUCT, kind="ktree", k=1, n=3)

    def test_json_output(self):
        config = _config(Command.CONSTRUCT, kind="kminus", k=3, format="json")
        self.assertEqual(OutputFormat.JSON, config.output_format)

    def test_unknown_kind(self):
        with self.assertRaisesRegex(ParameterError, "could not be found"):
            _config(Command.CONSTRUCT, kind="petersen", k=3)


class TestVerifyConfig(TestCase):
    def test_defaults(self):
        config = _config(Command.VERIFY, input=__file__, k=3)
        self.assertEqual(Path(__file__).resolve(), config.input)
        self.assertEqual(Family.EDGE, config.family)
        self.assertIsNone(config.budget)

    def test_vertex_family_by_name_or_value(self):
        for family in ("vertex", "VERTEX"):
            config = _config(Command.VERIFY, input=__file__, k=3, family=family)
            self.assertEqual(Family.VERTEX, config.family)

    def test_missing_input(self):
        with self.assertRaisesRegex(ParameterError, "expected an existing file"):
            _config(Command.VERIFY, input="/no/such/graph.txt", k=3)


class TestSearchConfig(TestCase):
    def test_defaults(self):
        config = _config(Command.SEARCH, n=6, k=3)
        self.assertEqual(SearchMode.SAT, config.mode)
        self.assertEqual(1, config.workers)

    def test_workers_must_be_positive(self):
        with self.assertRaisesRegex(ParameterError, "workers"):
            _config(Command.SEARCH, n=6, k=3, workers=0)

    def test_command_parameter(self):
        config = RunConfig.from_parameters(
            Parameters.from_mapping({"command": "search", "n": 5, "k": 2, "mode": "ex"})
        )
        self.assertEqual(Command.SEARCH, config.command)
        self.assertEqual(SearchMode.EX, config.mode)


class TestTableConfig(TestCase):
    def test_range_forms(self):
        self.assertEqual([4, 5, 6], _config(Command.TABLE, k=3, n_range="4..6").n_values())
        self.assertEqual([4, 5], _config(Command.TABLE, k=3, n_range=" 4 .. 5 ").n_values())
        self.assertEqual([5], _config(Command.TABLE, k=4, n_range=[5, 5]).n_values())

    def test_bad_ranges(self):
        with self.assertRaisesRegex(ParameterError, "of the form A..B"):
            _config(Command.TABLE, k=3, n_range="4-6")
        with self.assertRaisesRegex(ParameterError, "of the form A..B"):
            _config(Command.TABLE, k=3, n_range=[4, True])
        with self.assertRaisesRegex(ParameterError, "n_range 6..4 is empty"):
            _config(Command.TABLE, k=3, n_range="6..4")
        with self.assertRaisesRegex(ParameterError, "Table rows start at n = k \\+ 1 = 4"):
            _config(Command.TABLE, k=3, n_range="3..6")

    def test_edge_family_only(self):
        with self.assertRaisesRegex(ParameterError, "k-edge-connectivity formulas only"):
            _config(Command.TABLE, k=3, n_range="4..6", family="vertex")

    def test_only_tables_have_n_values(self):
        with self.assertRaisesRegex(ParameterError, "search has no n_range"):
            _config(Command.SEARCH, n=5, k=3).n_values()


class TestSpectralConfig(TestCase):
    def test_defaults(self):
        config = _config(Command.SPECTRAL, input=__file__)
        self.assertIsNone(config.k)
        self.assertIsNone(config.partition)
        self.assertEqual(DEFAULT_TOLERANCE, config.tol)

    def test_tolerance_must_be_positive(self):
        with self.assertRaisesRegex(ParameterError, "tol must be positive"):
            _config(Command.SPECTRAL, input=__file__, tol=0.0)


@pytest.mark.parametrize(
    "command,params,foreign",
    [
        (Command.CONSTRUCT, {"kind": "kminus", "k": 3, "family": "edge"}, "family"),
        (Command.VERIFY, {"input": __file__, "k": 3, "mode": "ex"}, "mode"),
        (Command.SEARCH, {"n": 5, "k": 3, "n_range": "4..6"}, "n_range"),
        (Command.TABLE, {"k": 3, "n_range": "4..6", "n": 5}, "n"),
        (Command.SPECTRAL, {"input": __file__, "budget": 3}, "budget"),
    ],
)
def test_foreign_parameters_are_rejected(command, params, foreign):
    with pytest.raises(ParameterError, match=rf"does not take the parameters \['{foreign}'\]"):
        RunConfig.from_parameters(Parameters.from_mapping(params), command)


def test_logging_and_command_are_always_accepted():
    params = Parameters.from_mapping(
        {"command": "search", "logging": {"root_level": "DEBUG"}, "n": 4, "k": 3}
    )
    assert RunConfig.from_parameters(params).n == 4


def test_parameter_value():
    assert parameter_value(Path("a/b.txt")) == str(Path("a/b.txt"))
    assert parameter_value(Family.VERTEX) == "vertex"
    assert parameter_value(3) == 3


@pytest.mark.parametrize(
    "kind,min_k", [("gkn", 3), ("split", 1), ("kminus", 2), ("ktree", 2)]
)
def test_construction_kinds_know_their_least_k(kind, min_k):
    assert ConstructionKind(kind).min_k == min_k
