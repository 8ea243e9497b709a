"""Seeded random instances for stress suites and the conjecture hunt."""

from __future__ import annotations

import random
from itertools import combinations, product

from .errors import ValidationError
from .hypergraph import (
    BipartiteGraph,
    Hypergraph,
    bipartite_connected,
    make_bipartite,
    make_hypergraph,
)
from .tensor import BoolTensor, make_tensor


def random_simple_hypergraph(rng: random.Random, n: int, d: int, edge_count: int) -> Hypergraph:
    """Uniformly sampled simple d-uniform hypergraph with the given number of edges."""
    pool = list(combinations(range(n), d))
    if edge_count > len(pool):
        raise ValidationError(f"at most {len(pool)} distinct hyperedges exist, asked for {edge_count}")
    return make_hypergraph(n, d, rng.sample(pool, edge_count))


def random_regular_bipartite(rng: random.Random, n: int, d: int, *,
                             require_connected: bool = True,
                             max_tries: int = 10_000) -> BipartiteGraph:
    """Random simple d-regular bipartite graph with parts of size n.

    Superimposes d pairwise position-disjoint random permutations; resamples
    on collisions and (optionally) until the graph is connected.
    """
    if d > n:
        raise ValidationError(f"a simple {d}-regular graph needs parts of size at least {d}")
    for _ in range(max_tries):
        used: set[tuple[int, int]] = set()
        failed = False
        for _ in range(d):
            for _ in range(200):
                perm = list(range(n))
                rng.shuffle(perm)
                pairs = [(i, perm[i]) for i in range(n)]
                if not any(p in used for p in pairs):
                    used.update(pairs)
                    break
            else:
                failed = True
                break
        if failed:
            continue
        B = make_bipartite(n, n, used)
        if not require_connected or bipartite_connected(B):
            return B
    raise ValidationError(f"failed to sample a {d}-regular bipartite graph on parts of {n}")


def random_regular_int_matrix(rng: random.Random, n: int, k: int) -> list[list[int]]:
    """Sum of k random permutation matrices: nonnegative integers, all line sums k."""
    matrix = [[0] * n for _ in range(n)]
    for _ in range(k):
        perm = list(range(n))
        rng.shuffle(perm)
        for i, j in enumerate(perm):
            matrix[i][j] += 1
    return matrix


def random_bool_tensor(rng: random.Random, d: int, n: int, entry_count: int) -> BoolTensor:
    """Random (0,1) tensor with the given number of unit entries."""
    pool = list(product(range(n), repeat=d))
    if entry_count > len(pool):
        raise ValidationError(f"at most {len(pool)} entries exist, asked for {entry_count}")
    return make_tensor(d, n, rng.sample(pool, entry_count))
