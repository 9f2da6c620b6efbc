#!/usr/bin/env python

"""
Find, by exhaustive search, the fewest (*mode* ``sat``) or most (``ex``) edges of a graph on
*n* vertices saturated for the k-edge-connected (*family* ``edge``) or k-connected
(``vertex``) graphs.

The JSON result, with one witness per isomorphism class, goes to *out* or standard output.
It also gives the closed-form value where one is known. The exit code is 6 if the
searched value contradicts it and 4 if *n* is beyond the search budget (see
`satgraph.budgets`). *workers* > 1 spreads the search over that many processes.
"""
import logging
from typing import Any, Dict

from satgraph.io_utils import emit, json_string
from satgraph.parameters import Parameters
from satgraph.parameters_only_entrypoint import parameters_only_entry_point
from satgraph.preconditions import check_not_none
from satgraph.run_config import Command, ExitCode, RunConfig
from satgraph.saturation import Family, SearchMode, check_extremal_structure
from satgraph.search import search_optimum

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


def main(params: Parameters) -> int:
    config = RunConfig.from_parameters(params, Command.SEARCH)
    n = check_not_none(config.n)
    k = check_not_none(config.k)
    result = search_optimum(
        n, k, config.family, config.mode, workers=config.workers, budget=config.budget
    )
    log.info(
        "Found %s = %s over %s candidates in %.1f ms",
        config.mode.value,
        result.value,
        result.graphs_examined,
        result.elapsed_ms,
    )

    output: Dict[str, Any] = result.to_json()
    output["expected_value"] = result.expected_value
    output["matches_formula"] = result.matches_formula
    if config.family is Family.EDGE and config.mode is SearchMode.EX and n >= max(2, k + 1):
        output["extremal_structure"] = check_extremal_structure(result)
    emit(json_string(output), config.out)
    return ExitCode.OK if result.matches_formula else ExitCode.FORMULA_MISMATCH


if __name__ == "__main__":
    parameters_only_entry_point(main)
