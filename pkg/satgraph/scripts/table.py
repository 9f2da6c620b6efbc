#!/usr/bin/env python

"""
Tabulate the closed forms for k-edge-connectivity saturation against exhaustive search.

One CSV row per *n* in *n_range* (``A..B``, starting at *k* + 1) with the columns

* ``n``;
* ``rho_formula``: `satgraph.constructions.rho`, the fewest edges;
* ``sat_searched``: the fewest edges found by search, blank beyond the search budget;
* ``ex_formula``: `satgraph.constructions.ex_formula`, the most edges;
* ``ex_searched``: the most edges found by search, blank beyond the search budget;
* ``gap``: ``ex_formula - rho_formula``.

The table goes to *out* or standard output. The exit code is 6 if any searched value
contradicts its closed form.
"""
import csv
import io
import logging
from typing import Any, Dict, List, Optional

from satgraph.budgets import BudgetExceededError
from satgraph.constructions import ex_formula, rho
from satgraph.io_utils import emit
from satgraph.parameters import Parameters
from satgraph.parameters_only_entrypoint import parameters_only_entry_point
from satgraph.preconditions import check_not_none
from satgraph.run_config import Command, ExitCode, RunConfig
from satgraph.saturation import Family, SearchMode, SearchResult
from satgraph.search import check_sat_at_most_ex, search_optimum

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

COLUMNS = ("n", "rho_formula", "sat_searched", "ex_formula", "ex_searched", "gap")


def _search_within_budget(
    n: int, k: int, mode: SearchMode, config: RunConfig
) -> Optional[SearchResult]:
    try:
        return search_optimum(
            n, k, Family.EDGE, mode, workers=config.workers, budget=config.budget
        )
    except BudgetExceededError as e:
        log.info("Leaving %s blank for n=%s: %s", mode.value, n, e)
        return None


def table_rows(config: RunConfig) -> List[Dict[str, Any]]:
    k = check_not_none(config.k)
    ret = []
    for n in config.n_values():
        sat_result = _search_within_budget(n, k, SearchMode.SAT, config)
        ex_result = _search_within_budget(n, k, SearchMode.EX, config)
        if sat_result is not None and ex_result is not None:
            check_sat_at_most_ex(sat_result, ex_result)
        ret.append(
            {
                "n": n,
                "rho_formula": rho(k, n),
                "sat_searched": "" if sat_result is None else sat_result.value,
                "ex_formula": ex_formula(k, n),
                "ex_searched": "" if ex_result is None else ex_result.value,
                "gap": ex_formula(k, n) - rho(k, n),
            }
        )
    return ret


def csv_string(rows: List[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def main(params: Parameters) -> int:
    config = RunConfig.from_parameters(params, Command.TABLE)
    rows = table_rows(config)
    emit(csv_string(rows), config.out)
    mismatched = [
        row["n"]
        for row in rows
        if row["sat_searched"] not in ("", row["rho_formula"])
        or row["ex_searched"] not in ("", row["ex_formula"])
    ]
    if mismatched:
        log.warning("Searched values contradict the closed forms at n=%s", mismatched)
        return ExitCode.FORMULA_MISMATCH
    return ExitCode.OK


if __name__ == "__main__":
    parameters_only_entry_point(main)
