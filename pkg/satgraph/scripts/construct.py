#!/usr/bin/env python

"""
Build one of the named graphs and write it as an edge list or as JSON.

*kind* selects the graph:

* ``gkn``: the ladder graph with ``rho(k, n)`` edges, saturated for k-edge-connectivity
  (needs *k* >= 3 and *n* >= *k* + 1);
* ``split``: the complete split graph of a *(k-1)*-clique and *n-k+1* further vertices;
* ``kminus``: the complete graph on *k+1* vertices minus one edge;
* ``ktree``: a *(k-1)*-tree on *n* vertices grown from *seed* (default 0).

The graph goes to *out* if given, otherwise to standard output. In edge-list *format*
(the default) a ``gkn`` graph written to *out* also gets its block layout written to
``<out stem>.layout.json``; in ``json`` format the layout is part of the output.
"""
import logging
from typing import Any, Dict, Optional, Tuple

from satgraph.constructions import (
    GknLayout,
    build_complete_split,
    build_gkn,
    build_k_minus,
    build_k_tree,
)
from satgraph.graph import Graph
from satgraph.io_utils import edge_list_string, emit, json_string, layout_path_for
from satgraph.parameters import Parameters
from satgraph.parameters_only_entrypoint import parameters_only_entry_point
from satgraph.preconditions import check_not_none
from satgraph.run_config import Command, ConstructionKind, ExitCode, OutputFormat, RunConfig

log = logging.getLogger(__name__)  # pylint:disable=invalid-name


def build(config: RunConfig) -> Tuple[Graph, Optional[GknLayout]]:
    k = check_not_none(config.k)
    if config.kind is ConstructionKind.KMINUS:
        return (build_k_minus(k), None)
    n = check_not_none(config.n)
    if config.kind is ConstructionKind.GKN:
        return build_gkn(k, n)
    if config.kind is ConstructionKind.SPLIT:
        return (build_complete_split(n, k), None)
    return (build_k_tree(k - 1, n, seed=config.seed), None)


def graph_json(g: Graph, layout: Optional[GknLayout]) -> Dict[str, Any]:
    ret: Dict[str, Any] = {"n": g.n, "m": g.m, "edges": [list(edge) for edge in g.edges()]}
    if layout is not None:
        ret["layout"] = layout.to_json()
    return ret


def main(params: Parameters) -> int:
    config = RunConfig.from_parameters(params, Command.CONSTRUCT)
    (g, layout) = build(config)
    log.info("Built %s graph %s", config.kind.value if config.kind else None, g)
    if config.output_format is OutputFormat.JSON:
        emit(json_string(graph_json(g, layout)), config.out)
    else:
        emit(edge_list_string(g), config.out)
        if layout is not None and config.out is not None:
            layout_path = layout_path_for(config.out)
            emit(json_string(layout.to_json()), layout_path)
            log.info("Wrote block layout to %s", layout_path)
    return ExitCode.OK


if __name__ == "__main__":
    parameters_only_entry_point(main)
