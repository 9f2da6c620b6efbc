"""
Vertex-count budgets for the exponential-time operations.

Exhaustive search and the k-connected subgraph detector take time exponential in the
number of vertices, so each refuses inputs above a budget. The defaults can be replaced
for every operation at once with the ``SATGRAPH_BUDGET_NODES`` environment variable; a
budget passed explicitly to an operation wins over both.
"""
import logging
import os
from enum import Enum
from typing import Optional

from satgraph.preconditions import check_arg

log = logging.getLogger(__name__)  # pylint:disable=invalid-name

BUDGET_ENVIRONMENT_VARIABLE = "SATGRAPH_BUDGET_NODES"


class BudgetExceededError(RuntimeError):
    """
    Raised when an operation is asked to work on more vertices than its budget allows.
    """


class Budget(Enum):
    EDGE_SEARCH = 8
    VERTEX_SEARCH = 7
    K_CONNECTED_DETECTOR = 20
    CANONICAL_FORM = 10

    @property
    def default_nodes(self) -> int:
        return self.value


def effective_budget(budget: Budget, explicit: Optional[int] = None) -> int:
    """
    The vertex budget in force for *budget*.
    """
    if explicit is not None:
        check_arg(explicit >= 0, "Budgets must be non-negative but got %s", (explicit,))
        return explicit
    from_environment = os.environ.get(BUDGET_ENVIRONMENT_VARIABLE)
    if from_environment:
        try:
            ret = int(from_environment)
        except ValueError as e:
            raise ValueError(
                f"{BUDGET_ENVIRONMENT_VARIABLE} must be an integer but got "
                f"{from_environment!r}"
            ) from e
        check_arg(
            ret >= 0, "%s must be non-negative but got %s", (BUDGET_ENVIRONMENT_VARIABLE, ret)
        )
        return ret
    return budget.default_nodes


def check_budget(budget: Budget, n: int, explicit: Optional[int] = None) -> None:
    """
    Raise `BudgetExceededError` if *n* vertices exceeds the budget in force for *budget*.
    """
    allowed = effective_budget(budget, explicit)
    if n > allowed:
        raise BudgetExceededError(
            f"{budget.name.lower().replace('_', ' ')} is limited to {allowed} vertices but "
            f"was asked for {n}; raise the budget with an explicit budget or "
            f"{BUDGET_ENVIRONMENT_VARIABLE}"
        )
    log.debug("%s budget %s allows n=%s", budget.name, allowed, n)
