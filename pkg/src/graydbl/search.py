"""Backtracking search with a candidate budget."""

import os

from .errors import ResourceError

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "GRAYDBL_BUDGET"


def defaultBudget():
    """DEFAULT_BUDGET, unless overridden by the GRAYDBL_BUDGET environment variable."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if n <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return n


class Budget:
    def __init__(self, limit=None):
        self.limit = defaultBudget() if limit is None else limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise ResourceError(f"enumeration budget of {self.limit} candidates exceeded")


def backtrack(n, candidates, check, budget=None):
    """Yield every assignment (as a list) of variables 0..n-1.

    ``candidates(i, a)`` lists values for variable i given the partial
    assignment ``a`` of variables < i; ``check(i, a)`` validates constraints
    whose last variable is i.  Solutions come out in lexicographic order of
    the candidate lists.
    """
    budget = budget or Budget()
    a = [None] * n
    if n == 0:
        yield []
        return
    stack = [iter(candidates(0, a))]
    while stack:
        i = len(stack) - 1
        for value in stack[-1]:
            budget.spend()
            a[i] = value
            if check(i, a):
                break
        else:
            stack.pop()
            a[i] = None
            continue
        if i == n - 1:
            yield list(a)
        else:
            stack.append(iter(candidates(i + 1, a)))
