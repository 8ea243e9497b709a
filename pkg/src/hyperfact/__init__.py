"""Exact combinatorial counting: multidimensional permanents, hypergraph
one-factors and one-factorizations, latin squares, and integer-exact
verification of the bounds relating them."""

from .budget import DEFAULT_NODE_BUDGET, BudgetExceededError, NodeBudget
from .bounds import (
    BoundCorrection,
    CheckReport,
    bound_correction,
    check_conjecture_d3,
    check_corollary_degrees,
    check_dow_gibson,
    check_lemma4,
    check_proof_identities,
    check_schrijver,
    check_theorem4,
    check_theorem5_partite,
    check_trivial_bound,
    complete_one_factor_count,
    factorization_bound_main_terms,
)
from .errors import ValidationError
from .factorization import (
    Orientation,
    count_factorizations,
    count_one_factors,
    count_proper_decompositions,
    count_proper_edge_colorings,
    count_proper_orientations,
    count_union_orientations,
    d_factor_of_tuple,
    d_tuples_of_factors,
    is_proper,
    iter_factor_unions,
    iter_one_factors,
    iter_proper_orientations,
    make_orientation,
    multiplicity_product,
    orientation_to_diagonal,
)
from .hypergraph import (
    BipartiteGraph,
    Hypergraph,
    PartiteHypergraph,
    adjacency_tensor,
    balanced_partite_hypergraph,
    bipartite_connected,
    bipartite_representation,
    complete_hypergraph,
    complete_partite_hypergraph,
    degrees,
    format_hypergraph,
    incidence_matrix,
    is_connected,
    make_bipartite,
    make_hypergraph,
    parse_hypergraph,
    regular_degree,
)
from .latin import (
    all_distinct_tensor,
    count_latin_fixed_column,
    count_latin_squares,
    is_latin_square,
    latin_lower_bound,
)
from .permanent import (
    FactorialRootBound,
    asymptotic_permanent_term,
    dow_gibson_bound,
    permanent,
    permanent_2d_int,
    permanent_2d_ryser,
    schrijver_lower_bound,
    trivial_upper_bound,
)
from .tensor import (
    BoolTensor,
    Diagonal,
    format_tensor,
    hyperplane_counts,
    hyperplane_ones,
    is_diagonal,
    make_diagonal,
    make_tensor,
    parse_tensor,
)

__version__ = "0.1.0"
