from __future__ import annotations

import time

from ..errors import BudgetExceeded


class Ticker:
    """Counts search nodes and aborts with BudgetExceeded past the caps."""

    __slots__ = ("cap", "deadline", "count", "label")

    def __init__(self, node_cap: int | None = None, time_cap: float | None = None, label: str = ""):
        self.cap = node_cap
        self.deadline = None if time_cap is None else time.monotonic() + time_cap
        self.count = 0
        self.label = label

    def tick(self) -> None:
        self.count += 1
        if self.cap is not None and self.count > self.cap:
            raise BudgetExceeded("nodes", f"{self.label}: more than {self.cap} search nodes")
        if self.deadline is not None and not self.count & 1023 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time", f"{self.label}: time cap reached")


def ticker_from(budget, label: str) -> Ticker:
    if budget is None:
        return Ticker(None, None, label)
    return Ticker(budget.solver_node_cap, budget.solver_time_cap, label)
