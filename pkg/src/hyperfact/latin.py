"""Latin square counting and the all-distinct tensor linking it to permanents."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Sequence

from .budget import BudgetExceededError, NodeBudget, as_budget
from .errors import ValidationError
from .tensor import BoolTensor, make_tensor


def all_distinct_tensor(d: int) -> BoolTensor:
    """Order-d, d-dimensional tensor with unit entries at all-distinct index tuples.

    Its d! unit entries sit exactly at the permutations of (0, ..., d-1);
    its permanent equals the number of latin squares with a fixed column.
    """
    if d < 2:
        raise ValidationError(f"dimension must be at least 2, got {d}")
    return make_tensor(d, d, permutations(range(d)))


def _count_latin(n: int, fix_first_column: bool, b: NodeBudget) -> int:
    if n < 1:
        raise ValidationError(f"order must be at least 1, got {n}")
    full = (1 << n) - 1
    row_used = [0] * n
    col_used = [0] * n
    limit = b.limit

    def fill(cell: int) -> int:
        if cell == n * n:
            return 1
        r, c = divmod(cell, n)
        avail = ~(row_used[r] | col_used[c]) & full
        if fix_first_column and c == 0:
            avail &= 1 << r
        total = 0
        while avail:
            bit = avail & -avail
            avail ^= bit
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            row_used[r] |= bit
            col_used[c] |= bit
            total += fill(cell + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit
        return total

    return fill(0)


def count_latin_squares(n: int, *, budget: NodeBudget | int | None = None) -> int:
    """Exact number of n x n latin squares, by cell-by-cell backtracking."""
    return _count_latin(n, False, as_budget(budget))


def count_latin_fixed_column(n: int, *, budget: NodeBudget | int | None = None) -> int:
    """Latin squares whose column 0 is the identity column (0, 1, ..., n-1).

    By symmetry any fixed filling gives the same count, and the total count
    is n! times this one.
    """
    return _count_latin(n, True, as_budget(budget))


def latin_lower_bound(d: int) -> Fraction:
    """The classical lower bound d!^(2d) / d^(d^2) on the latin square count."""
    if d < 1:
        raise ValidationError(f"order must be at least 1, got {d}")
    return Fraction(factorial(d) ** (2 * d), d ** (d * d))


def is_latin_square(grid: Sequence[Sequence[int]]) -> bool:
    """True iff every row and every column contains each of 0..n-1 exactly once."""
    n = len(grid)
    symbols = set(range(n))
    rows = [list(row) for row in grid]
    if any(len(row) != n for row in rows):
        return False
    if any(set(row) != symbols for row in rows):
        return False
    return all({rows[r][c] for r in range(n)} == symbols for c in range(n))
