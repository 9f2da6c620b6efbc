from satgraph.budgets import (
    BUDGET_ENVIRONMENT_VARIABLE,
    Budget,
    BudgetExceededError,
    check_budget,
    effective_budget,
)

import pytest


def test_defaults(monkeypatch):
    monkeypatch.delenv(BUDGET_ENVIRONMENT_VARIABLE, raising=False)
    assert effective_budget(Budget.EDGE_SEARCH) == 8
    assert effective_budget(Budget.VERTEX_SEARCH) == 7
    assert effective_budget(Budget.K_CONNECTED_DETECTOR) == 20
    assert effective_budget(Budget.CANONICAL_FORM) == 10


def test_environment_overrides_defaults(monkeypatch):
    monkeypatch.setenv(BUDGET_ENVIRONMENT_VARIABLE, "11")
    assert effective_budget(Budget.EDGE_SEARCH) == 11
    assert effective_budget(Budget.EDGE_SEARCH, 3) == 3


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv(BUDGET_ENVIRONMENT_VARIABLE, "lots")
    with pytest.raises(ValueError, match=BUDGET_ENVIRONMENT_VARIABLE):
        effective_budget(Budget.EDGE_SEARCH)
    monkeypatch.setenv(BUDGET_ENVIRONMENT_VARIABLE, "-1")
    with pytest.raises(ValueError, match="non-negative"):
        effective_budget(Budget.EDGE_SEARCH)


def test_check_budget(monkeypatch):
    monkeypatch.delenv(BUDGET_ENVIRONMENT_VARIABLE, raising=False)
    check_budget(Budget.EDGE_SEARCH, 8)
    with pytest.raises(BudgetExceededError, match="edge search is limited to 8 vertices"):
        check_budget(Budget.EDGE_SEARCH, 9)
    with pytest.raises(ValueError):
        check_budget(Budget.EDGE_SEARCH, 2, -1)
