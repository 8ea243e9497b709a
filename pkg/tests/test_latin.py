import math
from fractions import Fraction

import pytest

from hyperfact import (
    BudgetExceededError,
    ValidationError,
    adjacency_tensor,
    all_distinct_tensor,
    count_latin_fixed_column,
    count_latin_squares,
    count_proper_edge_colorings,
    is_latin_square,
    latin_lower_bound,
    make_bipartite,
    make_hypergraph,
    permanent,
)
from oracles import latin_count_by_rows


def test_all_distinct_tensor_shape():
    t = all_distinct_tensor(2)
    assert t.ones == frozenset({(0, 1), (1, 0)})
    for d in (2, 3, 4):
        assert len(all_distinct_tensor(d).ones) == math.factorial(d)


def test_all_distinct_tensor_is_single_hyperedge_adjacency():
    assert all_distinct_tensor(3) == adjacency_tensor(make_hypergraph(3, 3, [(0, 1, 2)]))


def test_latin_counts_small():
    assert count_latin_squares(1) == 1
    assert count_latin_squares(2) == 2
    assert count_latin_squares(3) == 12
    assert count_latin_squares(4) == 576
    assert count_latin_fixed_column(3) == 2
    assert count_latin_fixed_column(4) == 24


def test_latin_counts_match_row_oracle():
    for n in (1, 2, 3, 4):
        assert count_latin_squares(n) == latin_count_by_rows(n)
        assert count_latin_fixed_column(n) == latin_count_by_rows(n, fixed_first_column=True)


def test_total_is_factorial_times_fixed_column():
    for n in range(1, 6):
        assert count_latin_squares(n) == math.factorial(n) * count_latin_fixed_column(n)


def test_permanent_of_all_distinct_tensor_counts_fixed_column_squares():
    for d in (2, 3, 4):
        assert permanent(all_distinct_tensor(d)) == count_latin_fixed_column(d)


def test_complete_bipartite_colorings_equal_total_squares():
    # ordered one-factorizations of the complete bipartite graph, d colors
    for d in (2, 3):
        B = make_bipartite(d, d, [(x, y) for x in range(d) for y in range(d)])
        assert count_proper_edge_colorings(B) == math.factorial(d) * permanent(
            all_distinct_tensor(d)
        )
        assert count_proper_edge_colorings(B) == count_latin_squares(d)


def test_latin_lower_bound_values():
    assert latin_lower_bound(1) == 1
    assert latin_lower_bound(3) == Fraction(46656, 19683)
    assert count_latin_squares(3) >= latin_lower_bound(3)
    assert count_latin_squares(4) >= latin_lower_bound(4) == Fraction(24**8, 4**16)


def test_latin_budget_and_validation():
    with pytest.raises(BudgetExceededError):
        count_latin_squares(5, budget=100)
    with pytest.raises(ValidationError):
        count_latin_squares(0)


def test_is_latin_square():
    assert is_latin_square([[0, 1], [1, 0]])
    assert not is_latin_square([[0, 1], [0, 1]])
    assert not is_latin_square([[0, 1]])
    assert is_latin_square([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
