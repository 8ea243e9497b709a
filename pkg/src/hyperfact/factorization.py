"""One-factors, one-factorizations, proper orientations and their bipartite counterparts.

Counting conventions, fixed once for the whole package:

* A one-factor is a set of hyperedge *values* covering every vertex exactly
  once; identical copies never appear twice inside one factor.
* A one-factorization is an ordered sequence of one-factors whose multiset
  union is the whole edge multiset.  Two sequences count as one when they
  agree factor by factor as value sets, so interchangeable copies do not
  inflate the count.  The unordered count treats the sequence as a multiset.
* An orientation assigns a vertex ordering to every hyperedge instance and is
  itself a multiset of oriented tuples: identical copies are
  indistinguishable.  It is proper when no vertex occupies the same position
  in two oriented hyperedges.  The labeled-copies count is the edge-coloring
  count of the bipartite representation, and the quotient between the two is
  exactly the product of multiplicity factorials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .budget import BudgetExceededError, NodeBudget, as_budget
from .errors import ValidationError
from .hypergraph import BipartiteGraph, Hypergraph, make_hypergraph, regular_degree
from .tensor import Diagonal, make_diagonal

Edge = tuple[int, ...]
OneFactor = tuple[Edge, ...]


def _edge_mask(edge: Edge) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << v
    return mask


def _cover_tables(n: int, edges: Sequence[Edge]) -> tuple[list[int], list[list[int]]]:
    masks = [_edge_mask(e) for e in edges]
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for i, edge in enumerate(edges):
        for v in edge:
            by_vertex[v].append(i)
    return masks, by_vertex


def _iter_exact_covers(n: int, edges: Sequence[Edge], b: NodeBudget) -> Iterator[OneFactor]:
    """All subsets of distinct `edges` covering 0..n-1 exactly once.

    Branches on the lowest uncovered vertex; yields factors in ascending
    lexicographic order.
    """
    full = (1 << n) - 1
    masks, by_vertex = _cover_tables(n, edges)
    chosen: list[int] = []
    limit = b.limit

    def walk(covered: int) -> Iterator[OneFactor]:
        if covered == full:
            yield tuple(edges[i] for i in chosen)
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        for i in by_vertex[v]:
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            mask = masks[i]
            if mask & covered:
                continue
            chosen.append(i)
            yield from walk(covered | mask)
            chosen.pop()

    yield from walk(0)


def _count_exact_covers(n: int, edges: Sequence[Edge], b: NodeBudget) -> int:
    full = (1 << n) - 1
    masks, by_vertex = _cover_tables(n, edges)
    memo: dict[int, int] = {}
    limit = b.limit

    def count(covered: int) -> int:
        if covered == full:
            return 1
        cached = memo.get(covered)
        if cached is not None:
            return cached
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        total = 0
        for i in by_vertex[v]:
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            mask = masks[i]
            if mask & covered:
                continue
            total += count(covered | mask)
        memo[covered] = total
        return total

    return count(0)


def iter_one_factors(G: Hypergraph, *, budget: NodeBudget | int | None = None) -> Iterator[OneFactor]:
    """Enumerate the one-factors of G, duplicate-free over edge values."""
    if G.n % G.d != 0:
        return iter(())
    return _iter_exact_covers(G.n, G.support(), as_budget(budget))


def count_one_factors(G: Hypergraph, *, budget: NodeBudget | int | None = None) -> int:
    if G.n % G.d != 0:
        return 0
    return _count_exact_covers(G.n, G.support(), as_budget(budget))


def count_factorizations(G: Hypergraph, ordered: bool = True, *,
                         budget: NodeBudget | int | None = None) -> int:
    """Number of partitions of the edge multiset into disjoint one-factors.

    Ordered by default (sequences of factors); `ordered=False` counts
    multisets by direct enumeration, forcing each new factor to contain the
    smallest remaining edge.
    """
    b = as_budget(budget)
    remaining = Counter(G.edges)
    if not remaining:
        return 1
    if G.n % G.d != 0:
        return 0
    memo: dict[tuple[tuple[Edge, int], ...], int] = {}

    def count(rem: tuple[tuple[Edge, int], ...]) -> int:
        if not rem:
            return 1
        cached = memo.get(rem)
        if cached is not None:
            return cached
        support = [edge for edge, _ in rem]
        smallest = support[0]
        total = 0
        for factor in _iter_exact_covers(G.n, support, b):
            if not ordered and smallest not in factor:
                continue
            counter = Counter(dict(rem))
            for edge in factor:
                counter[edge] -= 1
                if not counter[edge]:
                    del counter[edge]
            total += count(tuple(sorted(counter.items())))
        memo[rem] = total
        return total

    return count(tuple(sorted(remaining.items())))


def d_tuples_of_factors(G: Hypergraph, *,
                        budget: NodeBudget | int | None = None) -> Iterator[tuple[OneFactor, ...]]:
    """All ordered d-tuples of one-factors of a simple G, repetition allowed."""
    if not G.is_simple:
        raise ValidationError("tuples of one-factors are defined for simple hypergraphs")
    factors = list(iter_one_factors(G, budget=budget))
    return product(factors, repeat=G.d)


def d_factor_of_tuple(factors: Sequence[OneFactor]) -> Hypergraph:
    """Multiset union of a d-tuple of one-factors: a d-uniform d-factor."""
    if not factors:
        raise ValidationError("need at least one one-factor")
    d = len(factors)
    edges = [edge for factor in factors for edge in factor]
    if not edges:
        raise ValidationError("one-factors must be nonempty")
    if any(len(edge) != d for edge in edges):
        raise ValidationError(
            f"a {d}-tuple of one-factors must consist of {d}-element hyperedges"
        )
    n = d * len(factors[0])
    covered_ok = all(
        sorted(v for edge in factor for v in edge) == list(range(n)) for factor in factors
    )
    if not covered_ok:
        raise ValidationError("every tuple member must cover the same vertex set exactly once")
    return make_hypergraph(n, d, edges)


def iter_factor_unions(G: Hypergraph, *,
                       budget: NodeBudget | int | None = None) -> Iterator[Hypergraph]:
    """Distinct d-factors formed by multisets of d one-factors of a simple G."""
    b = as_budget(budget)
    if not G.is_simple:
        raise ValidationError("factor unions are defined for simple hypergraphs")
    factors = list(iter_one_factors(G, budget=b))
    seen: set[tuple[Edge, ...]] = set()
    for combo in combinations_with_replacement(factors, G.d):
        edges = tuple(sorted(edge for factor in combo for edge in factor))
        if edges in seen:
            continue
        seen.add(edges)
        yield make_hypergraph(G.n, G.d, edges)


def multiplicity_product(F: Hypergraph) -> int:
    """Product of the factorials of the hyperedge multiplicities."""
    result = 1
    for count in F.multiplicities().values():
        result *= factorial(count)
    return result


@dataclass(frozen=True)
class Orientation:
    """A multiset of oriented hyperedges, stored as a sorted tuple of vertex tuples."""

    tuples: tuple[tuple[int, ...], ...]


def make_orientation(oriented: Iterable[Sequence[int]]) -> Orientation:
    items = [tuple(int(v) for v in t) for t in oriented]
    if not items:
        raise ValidationError("orientation must orient at least one hyperedge")
    width = len(items[0])
    for t in items:
        if len(t) != width:
            raise ValidationError("all oriented hyperedges must have the same size")
        if len(set(t)) != len(t):
            raise ValidationError(f"oriented hyperedge {t} repeats a vertex")
    return Orientation(tuple(sorted(items)))


def is_proper(orientation: Orientation) -> bool:
    """True iff no vertex occupies the same position in two oriented hyperedges."""
    seen: set[tuple[int, int]] = set()
    for t in orientation.tuples:
        for pos, v in enumerate(t):
            if (v, pos) in seen:
                return False
            seen.add((v, pos))
    return True


def _orientation_groups(F: Hypergraph) -> list[tuple[Edge, int]]:
    return sorted(Counter(F.edges).items())


def count_proper_orientations(F: Hypergraph, *,
                              budget: NodeBudget | int | None = None) -> int:
    """Number of proper orientations, identical copies indistinguishable.

    Copies of one hyperedge receive strictly increasing orientations so each
    multiset is counted once (equal orientations on two copies would clash on
    every position anyway).
    """
    b = as_budget(budget)
    groups = _orientation_groups(F)
    pos_used = [0] * F.n
    limit = b.limit

    def assign(g: int, copy: int, prev: tuple[int, ...] | None) -> int:
        if g == len(groups):
            return 1
        edge, mult = groups[g]
        total = 0
        for perm in permutations(edge):
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            if prev is not None and perm <= prev:
                continue
            placed = 0
            ok = True
            for pos, v in enumerate(perm):
                bit = 1 << pos
                if pos_used[v] & bit:
                    ok = False
                    break
                pos_used[v] |= bit
                placed += 1
            if ok:
                if copy + 1 < mult:
                    total += assign(g, copy + 1, perm)
                else:
                    total += assign(g + 1, 0, None)
            for pos in range(placed):
                pos_used[perm[pos]] ^= 1 << pos
        return total

    return assign(0, 0, None)


def iter_proper_orientations(F: Hypergraph, *,
                             budget: NodeBudget | int | None = None) -> Iterator[Orientation]:
    """Enumerate the proper orientations counted by `count_proper_orientations`."""
    b = as_budget(budget)
    groups = _orientation_groups(F)
    pos_used = [0] * F.n
    chosen: list[tuple[int, ...]] = []
    limit = b.limit

    def assign(g: int, copy: int, prev: tuple[int, ...] | None) -> Iterator[Orientation]:
        if g == len(groups):
            yield Orientation(tuple(sorted(chosen)))
            return
        edge, mult = groups[g]
        for perm in permutations(edge):
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            if prev is not None and perm <= prev:
                continue
            placed = 0
            ok = True
            for pos, v in enumerate(perm):
                bit = 1 << pos
                if pos_used[v] & bit:
                    ok = False
                    break
                pos_used[v] |= bit
                placed += 1
            if ok:
                chosen.append(perm)
                if copy + 1 < mult:
                    yield from assign(g, copy + 1, perm)
                else:
                    yield from assign(g + 1, 0, None)
                chosen.pop()
            for pos in range(placed):
                pos_used[perm[pos]] ^= 1 << pos

    yield from assign(0, 0, None)


def count_proper_edge_colorings(B: BipartiteGraph, colors: int | None = None, *,
                                budget: NodeBudget | int | None = None) -> int:
    """Colorings of the edges of a regular bipartite graph, no color repeated at a vertex.

    With d colors on a d-regular graph this equals the number of ordered
    one-factorizations of B.
    """
    b = as_budget(budget)
    d = regular_degree(B)
    k = d if colors is None else colors
    edges = sorted(B.edges)
    left_used = [0] * B.left
    right_used = [0] * B.right
    full = (1 << k) - 1
    limit = b.limit

    def color(i: int) -> int:
        if i == len(edges):
            return 1
        x, y = edges[i]
        avail = ~(left_used[x] | right_used[y]) & full
        total = 0
        while avail:
            bit = avail & -avail
            avail ^= bit
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            left_used[x] |= bit
            right_used[y] |= bit
            total += color(i + 1)
            left_used[x] ^= bit
            right_used[y] ^= bit
        return total

    return color(0)


def count_proper_decompositions(B: BipartiteGraph, *,
                                budget: NodeBudget | int | None = None) -> int:
    """Ordered partitions (Y_1..Y_d) of the right part, each left vertex meeting every class once."""
    b = as_budget(budget)
    d = regular_degree(B)
    if B.left != B.right:
        raise ValidationError("proper decompositions need parts of equal size")
    n = B.left
    if n % d != 0:
        raise ValidationError(f"the regular degree {d} must divide the part size {n}")
    neighbors: list[list[int]] = [[] for _ in range(B.right)]
    for x, y in B.edges:
        neighbors[y].append(x)
    left_used = [0] * n
    limit = b.limit

    def place(y: int) -> int:
        if y == n:
            return 1
        total = 0
        nbrs = neighbors[y]
        for c in range(d):
            b.used += 1
            if b.used > limit:
                raise BudgetExceededError(limit)
            bit = 1 << c
            if any(left_used[x] & bit for x in nbrs):
                continue
            for x in nbrs:
                left_used[x] |= bit
            total += place(y + 1)
            for x in nbrs:
                left_used[x] ^= bit
        return total

    return place(0)


def orientation_to_diagonal(orientation: Orientation, order: int) -> Diagonal:
    """The unit diagonal induced by a proper orientation.

    An orientation of a d-factor on n vertices contributes its n oriented
    tuples directly.  An orientation of a single one-factor (n/d tuples) is
    first expanded by cyclic shifts, each oriented hyperedge contributing d
    index tuples.
    """
    tuples = orientation.tuples
    if not is_proper(orientation):
        raise ValidationError("orientation is not proper")
    d = len(tuples[0])
    if len(tuples) == order:
        entries = list(tuples)
    elif len(tuples) * d == order:
        covered = sorted(v for t in tuples for v in t)
        if covered != list(range(order)):
            raise ValidationError(
                "cyclic expansion needs a one-factor orientation covering every vertex once"
            )
        entries = [t[i:] + t[:i] for t in tuples for i in range(d)]
    else:
        raise ValidationError(
            f"{len(tuples)} oriented hyperedges of size {d} cannot induce a diagonal of order {order}"
        )
    return make_diagonal(d, order, entries)


def count_union_orientations(G: Hypergraph, *,
                             budget: NodeBudget | int | None = None) -> int:
    """Total proper orientations over all distinct d-factors formed by d-tuples of one-factors.

    Orientation sets of distinct factors are disjoint (an orientation
    determines its underlying edge multiset), so the total is a plain sum.
    """
    b = as_budget(budget)
    return sum(
        count_proper_orientations(F, budget=b) for F in iter_factor_unions(G, budget=b)
    )
