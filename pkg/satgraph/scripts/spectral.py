#!/usr/bin/env python

"""
Report the spectral radius of the graph in the edge-list file *input* and how it compares
with the average and maximum degree.

If *k* is given, the report says whether the spectral radius reaches the floor that every
graph saturated for k-edge-connectivity or k-connectivity on more than *k* vertices
reaches. If *partition* names a file with one block of space-separated vertices per line,
the report gives its quotient matrix and the matrix's spectral radius. The exit code is 5
if that partition is not equitable; the report is printed either way.

*tol* is the relative tolerance of the power iteration (default ``1e-10``).
"""
import logging
from typing import Any, Dict

from satgraph.io_utils import (
    CharSource,
    emit,
    json_string,
    read_edge_list,
    read_partition_blocks,
)
from satgraph.parameters import Parameters
from satgraph.parameters_only_entrypoint import parameters_only_entry_point
from satgraph.preconditions import check_not_none
from satgraph.run_config import Command, ExitCode, RunConfig
from satgraph.spectral import (
    BOUND_TOLERANCE,
    Partition,
    degree_bounds_check,
    is_equitable,
    quotient_matrix,
    quotient_spectral_radius,
    saturated_spectral_floor,
)

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


def main(params: Parameters) -> int:
    config = RunConfig.from_parameters(params, Command.SPECTRAL)
    input_path = check_not_none(config.input)
    g = read_edge_list(CharSource.from_file(input_path))
    bounds = degree_bounds_check(g, config.tol)
    log.info("Spectral radius of %s is %s", g, bounds.spectral_radius)

    output: Dict[str, Any] = {"input": str(input_path), "n": g.n, "m": g.m}
    output.update(bounds.to_json())
    output["bounds_hold"] = bounds.holds()

    if config.k is not None:
        floor = saturated_spectral_floor(config.k)
        slack = BOUND_TOLERANCE * max(1.0, floor)
        output["floor"] = {
            "k": config.k,
            "value": floor,
            "met": bounds.spectral_radius >= floor - slack,
            "equality": abs(bounds.spectral_radius - floor) <= slack,
        }

    exit_code = ExitCode.OK
    if config.partition is not None:
        blocks = read_partition_blocks(CharSource.from_file(config.partition))
        partition = Partition.from_vertex_lists(g.n, blocks)
        quotient = is_equitable(g, partition)
        partition_report: Dict[str, Any] = {
            "path": str(config.partition),
            "equitable": quotient is not None,
        }
        if quotient is None:
            log.warning("Partition in %s is not equitable", config.partition)
            partition_report["quotient"] = quotient_matrix(g, partition).to_json()
            exit_code = ExitCode.NOT_EQUITABLE
        else:
            quotient_radius = quotient_spectral_radius(quotient, config.tol)
            partition_report["quotient"] = quotient.to_json()
            partition_report["quotient_spectral_radius"] = quotient_radius
            partition_report["matches_graph"] = abs(
                quotient_radius - bounds.spectral_radius
            ) <= BOUND_TOLERANCE * max(1.0, bounds.spectral_radius)
        output["partition"] = partition_report

    emit(json_string(output))
    return exit_code


if __name__ == "__main__":
    parameters_only_entry_point(main)
