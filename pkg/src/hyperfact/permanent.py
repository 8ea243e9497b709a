"""Exact permanents of (0,1) tensors and integer matrices, plus the classical bounds.

The multidimensional permanent of a (0,1) tensor counts its unit diagonals.
The search is a depth-first walk over the first coordinate 0..n-1: at level i
it extends the partial diagonal by a unit entry (i, c_1, ..., c_{d-1}) whose
remaining coordinates are unused on their axes.  Candidate entries are tried
in ascending lexicographic order and subtree counts are cached by the packed
used-coordinate mask, so the result is independent of visit order and of the
number of worker threads.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .budget import BudgetExceededError, NodeBudget, as_budget
from .errors import ValidationError
from .tensor import BoolTensor, hyperplane_counts


def permanent(tensor: BoolTensor, *, budget: NodeBudget | int | None = None,
              threads: int = 1) -> int:
    """Exact number of diagonals of `tensor` consisting entirely of unit entries.

    With threads > 1 the top-level branches are fanned out to a thread pool;
    the count is identical for any thread count.
    """
    b = as_budget(budget)
    d, n = tensor.dim, tensor.order
    buckets: list[list[int]] = [[] for _ in range(n)]
    for entry in sorted(tensor.ones):
        mask = 0
        for k in range(1, d):
            mask |= 1 << ((k - 1) * n + entry[k])
        buckets[entry[0]].append(mask)
    if any(not bucket for bucket in buckets):
        return 0

    memo: dict[int, int] = {}
    limit = b.limit

    def count_below(level: int, used: int) -> int:
        if level == n:
            return 1
        cached = memo.get(used)
        if cached is not None:
            return cached
        total = 0
        for mask in buckets[level]:
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            if used & mask:
                continue
            total += count_below(level + 1, used | mask)
        memo[used] = total
        return total

    if threads <= 1:
        return count_below(0, 0)

    def top_branch(mask: int) -> int:
        b.spend()
        return count_below(1, mask)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(top_branch, buckets[0]))


def _check_int_matrix(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(matrix)
    if n == 0:
        raise ValidationError("matrix must have at least one row")
    rows = []
    for i, row in enumerate(matrix):
        vals = [int(v) for v in row]
        if len(vals) != n:
            raise ValidationError(f"row {i} has {len(vals)} entries, expected {n}")
        for v in vals:
            if v < 0:
                raise ValidationError(f"row {i} contains a negative entry {v}")
        rows.append(vals)
    return rows


def permanent_2d_int(matrix: Sequence[Sequence[int]], *,
                     budget: NodeBudget | int | None = None) -> int:
    """Exact permanent of a square nonnegative integer matrix.

    Row expansion with a used-column mask, subtree results cached per mask.
    """
    rows = _check_int_matrix(matrix)
    n = len(rows)
    b = as_budget(budget)
    limit = b.limit
    memo: dict[int, int] = {}

    def expand(i: int, used: int) -> int:
        if i == n:
            return 1
        cached = memo.get(used)
        if cached is not None:
            return cached
        total = 0
        row = rows[i]
        for j in range(n):
            bit = 1 << j
            if used & bit or not row[j]:
                continue
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            total += row[j] * expand(i + 1, used | bit)
        memo[used] = total
        return total

    return expand(0, 0)


def permanent_2d_ryser(matrix: Sequence[Sequence[int]]) -> int:
    """Permanent by inclusion-exclusion over column subsets.

    Independent of the expansion route; the two must always agree.
    """
    rows = _check_int_matrix(matrix)
    n = len(rows)
    total = 0
    for subset in range(1, 1 << n):
        cols = [j for j in range(n) if subset >> j & 1]
        prod = 1
        for row in rows:
            s = 0
            for j in cols:
                s += row[j]
            prod *= s
            if prod == 0:
                break
        total += prod if (n - len(cols)) % 2 == 0 else -prod
    return total


def trivial_upper_bound(tensor: BoolTensor, axis: int) -> int:
    """Product of the unit counts of the hyperplanes of one direction."""
    result = 1
    for r in hyperplane_counts(tensor, axis):
        result *= r
    return result


@dataclass(frozen=True)
class FactorialRootBound:
    """The exact value prod_i (r_i!)^(1/r_i) for one direction's hyperplane counts.

    A zero count makes the bound zero (an empty hyperplane kills every
    diagonal, so the usual 0! = 1 convention does not apply here).
    Comparisons against integers clear the fractional exponents by raising
    both sides to the lcm of the nonzero counts, so verdicts are exact.
    """

    counts: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return any(r == 0 for r in self.counts)

    def raised(self) -> tuple[int, int]:
        """(bound ** L, L) with L = lcm of the counts; (0, 1) for a zero bound."""
        if self.is_zero:
            return 0, 1
        lcm = math.lcm(*self.counts)
        value = 1
        for r in self.counts:
            value *= math.factorial(r) ** (lcm // r)
        return value, lcm

    def compare(self, value: int) -> int:
        """Sign of (bound - value) for a nonnegative integer, computed exactly."""
        if value < 0:
            raise ValidationError("comparison value must be nonnegative")
        raised, lcm = self.raised()
        other = value**lcm
        return (raised > other) - (raised < other)

    def admits(self, count: int) -> bool:
        """True iff count <= bound."""
        return self.compare(count) >= 0

    def approx(self) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = 50
            if self.is_zero:
                return Decimal(0)
            result = Decimal(1)
            for r in self.counts:
                result *= Decimal(math.factorial(r)) ** (Decimal(1) / Decimal(r))
            return +result


def dow_gibson_bound(tensor: BoolTensor, axis: int) -> FactorialRootBound:
    """Permanent upper bound prod_i (r_i!)^(1/r_i) for 3-dimensional tensors."""
    if tensor.dim != 3:
        raise ValidationError(
            f"the factorial-root bound is only supported for dimension 3, got {tensor.dim}"
        )
    return FactorialRootBound(hyperplane_counts(tensor, axis))


def schrijver_lower_bound(degree: int, order: int) -> Fraction:
    """((k-1)^(k-1) / k^(k-2)) ** n, the permanent lower bound for k-regular matrices.

    Evaluates to 1 for k = 1 (a 1-regular matrix is a permutation matrix).
    """
    if degree < 1:
        raise ValidationError(f"degree must be at least 1, got {degree}")
    if order < 0:
        raise ValidationError(f"order must be nonnegative, got {order}")
    base = Fraction((degree - 1) ** (degree - 1)) / Fraction(degree) ** (degree - 2)
    return base**order


def asymptotic_permanent_term(tensor: BoolTensor, axis: int) -> Decimal:
    """Main term n!^(d-2) * prod_i S(r_i / n^(d-2)) with S(x) = ceil(x)!^(1/ceil(x)).

    Display value only: the underlying asymptotic inequality carries a
    vanishing correction factor that no finite instance can certify, so
    this is never reported as a bound.  Returns 0 when a hyperplane is
    empty (then the permanent is 0 and S is undefined at 0).
    """
    counts = hyperplane_counts(tensor, axis)
    if any(r == 0 for r in counts):
        return Decimal(0)
    d, n = tensor.dim, tensor.order
    scale = n ** (d - 2)
    with localcontext() as ctx:
        ctx.prec = 50
        term = Decimal(math.factorial(n)) ** (d - 2)
        for r in counts:
            c = math.ceil(Fraction(r, scale))
            term *= Decimal(math.factorial(c)) ** (Decimal(1) / Decimal(c))
        return +term
