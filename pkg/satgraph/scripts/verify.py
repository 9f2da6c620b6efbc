#!/usr/bin/env python

"""
Check whether the graph in the edge-list file *input* is saturated for the
k-edge-connected (*family* ``edge``, the default) or k-connected (``vertex``) graphs.

A JSON report is always printed. The exit code gives the verdict: 0 for saturated,
2 if the graph already contains a member of the family, 3 if some non-edge can be added
without creating one. For saturated graphs in the ``edge`` family with at least *k+1*
vertices the report also lists the structural checks such graphs always pass.

*budget* raises or lowers the vertex limit of the k-connected detector.
"""
import logging
from typing import Any, Dict

from satgraph.io_utils import CharSource, emit, json_string, read_edge_list
from satgraph.parameters import Parameters
from satgraph.parameters_only_entrypoint import parameters_only_entry_point
from satgraph.preconditions import check_not_none
from satgraph.run_config import Command, ExitCode, RunConfig
from satgraph.saturation import Family, Verdict, is_saturated, lemma_invariant_suite

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

_EXIT_CODES = {
    Verdict.SATURATED: ExitCode.OK,
    Verdict.CONTAINS_MEMBER: ExitCode.CONTAINS_MEMBER,
    Verdict.MISSES_EDGE: ExitCode.MISSES_EDGE,
}


def main(params: Parameters) -> int:
    config = RunConfig.from_parameters(params, Command.VERIFY)
    input_path = check_not_none(config.input)
    k = check_not_none(config.k)
    g = read_edge_list(CharSource.from_file(input_path))
    log.info("Checking %s from %s for k=%s, %s family", g, input_path, k, config.family.value)

    report = is_saturated(g, k, config.family, budget=config.budget)
    output: Dict[str, Any] = {"input": str(input_path), "n": g.n, "m": g.m}
    output.update(report.to_json())
    if report.saturated and config.family is Family.EDGE and k >= 2 and g.n >= k + 1:
        output["checks"] = {
            check.value: outcome.value for (check, outcome) in lemma_invariant_suite(g, k)
        }
    emit(json_string(output))
    log.info("Verdict: %s", report.verdict.value)
    return _EXIT_CODES[report.verdict]


if __name__ == "__main__":
    parameters_only_entry_point(main)
