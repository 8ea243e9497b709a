"""Node budgets for the exhaustive search engines.

Every backtracking search in this package charges one unit per visited
search node.  Exceeding the budget raises instead of returning a value,
so a caller can tell "instance too large" apart from an honest zero.
"""

from __future__ import annotations

DEFAULT_NODE_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """A search visited more nodes than its budget allows."""

    def __init__(self, limit: int):
        super().__init__(f"search exceeded the node budget of {limit} visited nodes")
        self.limit = limit


class NodeBudget:
    """Mutable node counter shared by the searches of one computation.

    The hot loops bump ``used`` inline.  Under multithreaded search the
    increments are not synchronised; lost updates can only undercount,
    so a run within budget is never aborted spuriously (the abort point
    may overshoot slightly, the counted results never change).
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        if limit <= 0:
            raise ValueError("node budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(self.limit)


def as_budget(budget: NodeBudget | int | None) -> NodeBudget:
    """Coerce an int limit or None (fresh default budget) to a NodeBudget."""
    if budget is None:
        return NodeBudget()
    if isinstance(budget, int):
        return NodeBudget(budget)
    return budget
