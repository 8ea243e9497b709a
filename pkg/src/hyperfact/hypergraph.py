"""d-uniform hypergraphs with hyperedge multiplicities and their matrix views.

Hyperedges are d-element vertex sets stored as sorted tuples; multiplicity is
repetition in the (sorted) edge list, so multiset equality is syntactic
equality.  Vertices are 0-based.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Hashable, Iterable, Sequence

from .errors import ValidationError
from .tensor import BoolTensor, make_tensor


@dataclass(frozen=True)
class Hypergraph:
    """n vertices plus a multiset of d-element hyperedges."""

    n: int
    d: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def multiplicities(self) -> dict[tuple[int, ...], int]:
        return dict(Counter(self.edges))

    def support(self) -> tuple[tuple[int, ...], ...]:
        """Distinct hyperedge values, in canonical order."""
        return tuple(sorted(set(self.edges)))


@dataclass(frozen=True)
class BipartiteGraph:
    """Two labeled parts with a set of (left, right) adjacencies.

    When built from a hypergraph, right vertex j stands for the j-th edge
    instance and `right_labels[j]` is that hyperedge's vertex tuple, so
    identical labels mark interchangeable copies.
    """

    left: int
    right: int
    edges: frozenset[tuple[int, int]]
    right_labels: tuple[Hashable, ...] | None = None


def make_hypergraph(n: int, d: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    if n < 1:
        raise ValidationError(f"vertex count must be at least 1, got {n}")
    if d < 1:
        raise ValidationError(f"uniformity must be at least 1, got {d}")
    canon = []
    for raw in edges:
        edge = tuple(sorted(int(v) for v in raw))
        if len(edge) != d:
            raise ValidationError(f"hyperedge {tuple(raw)!r} has {len(edge)} vertices, expected {d}")
        if len(set(edge)) != d:
            raise ValidationError(f"hyperedge {tuple(raw)!r} repeats a vertex")
        for v in edge:
            if not 0 <= v < n:
                raise ValidationError(f"hyperedge {tuple(raw)!r} has vertex {v} outside 0..{n - 1}")
        canon.append(edge)
    return Hypergraph(n, d, tuple(sorted(canon)))


def degrees(G: Hypergraph) -> tuple[int, ...]:
    """Vertex degrees, counting each hyperedge copy separately."""
    degs = [0] * G.n
    for edge in G.edges:
        for v in edge:
            degs[v] += 1
    return tuple(degs)


def is_connected(G: Hypergraph) -> bool:
    """True iff every vertex pair is linked by a chain of intersecting hyperedges."""
    if G.n <= 1:
        return True
    incident: list[list[int]] = [[] for _ in range(G.n)]
    support = G.support()
    for i, edge in enumerate(support):
        for v in edge:
            incident[v].append(i)
    seen_v = {0}
    seen_e: set[int] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i in incident[v]:
            if i in seen_e:
                continue
            seen_e.add(i)
            for u in support[i]:
                if u not in seen_v:
                    seen_v.add(u)
                    queue.append(u)
    return len(seen_v) == G.n


def adjacency_tensor(G: Hypergraph) -> BoolTensor:
    """d-dimensional order-n (0,1) tensor with a unit entry at every ordering of every hyperedge."""
    if G.d < 2:
        raise ValidationError("adjacency tensors need uniformity at least 2")
    if not G.is_simple:
        raise ValidationError(
            "adjacency tensors are (0,1); hypergraphs with multiple hyperedges are not representable"
        )
    ones = [perm for edge in G.support() for perm in permutations(edge)]
    return make_tensor(G.d, G.n, ones)


def incidence_matrix(G: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """n x m (0,1) matrix; columns follow the canonical edge order, copies adjacent."""
    rows = [[0] * len(G.edges) for _ in range(G.n)]
    for j, edge in enumerate(G.edges):
        for v in edge:
            rows[v][j] = 1
    return tuple(tuple(row) for row in rows)


def bipartite_representation(G: Hypergraph) -> BipartiteGraph:
    """Vertices-versus-hyperedges bipartite graph; its biadjacency is the incidence matrix."""
    edges = frozenset((v, j) for j, edge in enumerate(G.edges) for v in edge)
    return BipartiteGraph(G.n, len(G.edges), edges, right_labels=G.edges)


def complete_hypergraph(n: int, d: int) -> Hypergraph:
    """All d-element subsets of n vertices."""
    if not 1 <= d <= n:
        raise ValidationError(f"need 1 <= d <= n, got d={d}, n={n}")
    return make_hypergraph(n, d, combinations(range(n), d))


@dataclass(frozen=True)
class PartiteHypergraph:
    """A k-balanced d-partite hypergraph; part p holds vertices p*k .. (p+1)*k - 1."""

    graph: Hypergraph
    part_size: int

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        k = self.part_size
        return tuple(tuple(range(p * k, (p + 1) * k)) for p in range(self.graph.d))


def balanced_partite_hypergraph(part_size: int, d: int,
                                edges: Iterable[Sequence[int]]) -> PartiteHypergraph:
    """Validated k-balanced d-partite hypergraph with the part assignment retained."""
    if part_size < 1:
        raise ValidationError(f"part size must be at least 1, got {part_size}")
    G = make_hypergraph(part_size * d, d, edges)
    for edge in G.edges:
        parts_touched = {v // part_size for v in edge}
        if len(parts_touched) != d:
            raise ValidationError(
                f"hyperedge {edge} does not take exactly one vertex from each part"
            )
    return PartiteHypergraph(G, part_size)


def complete_partite_hypergraph(part_size: int, d: int) -> PartiteHypergraph:
    """All hyperedges with exactly one vertex per part."""
    if part_size < 1:
        raise ValidationError(f"part size must be at least 1, got {part_size}")
    ranges = [range(p * part_size, (p + 1) * part_size) for p in range(d)]
    return balanced_partite_hypergraph(part_size, d, product(*ranges))


def make_bipartite(left: int, right: int, edges: Iterable[Sequence[int]],
                   right_labels: Sequence[Hashable] | None = None) -> BipartiteGraph:
    if left < 1 or right < 1:
        raise ValidationError("both parts must be nonempty")
    canon = set()
    for raw in edges:
        x, y = (int(v) for v in raw)
        if not 0 <= x < left:
            raise ValidationError(f"left vertex {x} outside 0..{left - 1}")
        if not 0 <= y < right:
            raise ValidationError(f"right vertex {y} outside 0..{right - 1}")
        canon.add((x, y))
    labels = None
    if right_labels is not None:
        labels = tuple(right_labels)
        if len(labels) != right:
            raise ValidationError(f"expected {right} right labels, got {len(labels)}")
    return BipartiteGraph(left, right, frozenset(canon), labels)


def bipartite_degrees(B: BipartiteGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    left = [0] * B.left
    right = [0] * B.right
    for x, y in B.edges:
        left[x] += 1
        right[y] += 1
    return tuple(left), tuple(right)


def regular_degree(B: BipartiteGraph) -> int:
    """The common degree of a regular bipartite graph; error if degrees differ."""
    left, right = bipartite_degrees(B)
    values = set(left) | set(right)
    if len(values) != 1:
        raise ValidationError("bipartite graph is not regular")
    return values.pop()


def bipartite_connected(B: BipartiteGraph) -> bool:
    if B.left + B.right <= 1:
        return True
    adj_left: list[list[int]] = [[] for _ in range(B.left)]
    adj_right: list[list[int]] = [[] for _ in range(B.right)]
    for x, y in B.edges:
        adj_left[x].append(y)
        adj_right[y].append(x)
    seen = {("L", 0)}
    queue = deque([("L", 0)])
    while queue:
        side, v = queue.popleft()
        nbrs = adj_left[v] if side == "L" else adj_right[v]
        other = "R" if side == "L" else "L"
        for u in nbrs:
            if (other, u) not in seen:
                seen.add((other, u))
                queue.append((other, u))
    return len(seen) == B.left + B.right


def parse_hypergraph(text: str) -> Hypergraph:
    """Read the text format: "n m d" header, then m lines of d vertex indices.

    Repeated lines encode multiplicity; '#' starts a comment.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ValidationError("empty hypergraph input")
    lineno, header = rows[0]
    if len(header) != 3:
        raise ValidationError(f"line {lineno}: expected 'n m d' header, got {' '.join(header)!r}")
    try:
        n, m, d = (int(v) for v in header)
    except ValueError:
        raise ValidationError(f"line {lineno}: non-integer header {' '.join(header)!r}") from None
    if len(rows) - 1 != m:
        raise ValidationError(f"header promises {m} hyperedges, found {len(rows) - 1}")
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != d:
            raise ValidationError(f"line {lineno}: expected {d} vertices, got {len(parts)}")
        try:
            edges.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValidationError(f"line {lineno}: non-integer vertex in {' '.join(parts)!r}") from None
    return make_hypergraph(n, d, edges)


def format_hypergraph(G: Hypergraph) -> str:
    lines = [f"{G.n} {len(G.edges)} {G.d}"]
    lines.extend(" ".join(map(str, edge)) for edge in G.edges)
    return "\n".join(lines) + "\n"
