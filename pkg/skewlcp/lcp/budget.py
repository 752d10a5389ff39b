"""Work budgets for the distance engines.

Each engine estimates its work up front (codewords to enumerate, column subsets
to rank) and charges it here before starting. Overruns raise `BudgetExceeded`
instead of silently switching methods; the used ratio is exported as a gauge.
"""

from __future__ import annotations

import logging
from typing import Optional

from ..errors import BudgetExceeded
from ..metrics.registry import DISTANCE_BUDGET_USED_RATIO


logger = logging.getLogger("skewlcp.budget")


class SearchBudget:
    def __init__(self, limit: int, label: str = "distance") -> None:
        if limit < 1:
            raise ValueError("budget must be positive")
        self._limit = int(limit)
        self._label = label
        self._used = 0

    @property
    def limit(self) -> int:
        return self._limit

    @property
    def used(self) -> int:
        return self._used

    def remaining(self) -> int:
        return self._limit - self._used

    def charge(self, amount: int, what: Optional[str] = None) -> None:
        """Reserve `amount` units or raise without reserving anything."""
        needed = self._used + int(amount)
        if needed > self._limit:
            logger.warning(
                "budget exceeded",
                extra={"label": self._label, "what": what, "needed": needed, "budget": self._limit},
            )
            raise BudgetExceeded(
                f"{self._label} needs {needed} units ({what or 'work'}), budget is {self._limit}",
                needed=needed,
                budget=self._limit,
            )
        self._used = needed
        self.used_ratio()

    def used_ratio(self) -> float:
        ratio = min(1.0, self._used / float(self._limit))
        DISTANCE_BUDGET_USED_RATIO.set(ratio)
        return ratio
