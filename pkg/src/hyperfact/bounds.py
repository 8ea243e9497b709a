"""Integer-exact verification of the counting bounds, plus display-only asymptotics.

Every verdict is decided by comparing two nonnegative integers obtained by
clearing all fractional exponents: the correction factor in the one-factor
bound is irrational for d >= 3, but raising it to a small root (1 for d=2,
2 for d=3, d for d >= 4) makes it a rational power, so each inequality
becomes an exact integer comparison.  Decimal output is display only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from typing import Sequence

from .budget import BudgetExceededError, NodeBudget, as_budget
from .errors import ValidationError
from .factorization import (
    count_factorizations,
    count_one_factors,
    count_proper_decompositions,
    count_proper_edge_colorings,
    count_proper_orientations,
    multiplicity_product,
)
from .hypergraph import (
    BipartiteGraph,
    Hypergraph,
    PartiteHypergraph,
    adjacency_tensor,
    bipartite_connected,
    bipartite_representation,
    complete_hypergraph,
    degrees,
    regular_degree,
)
from .latin import count_latin_fixed_column
from .permanent import (
    dow_gibson_bound,
    permanent,
    permanent_2d_int,
    schrijver_lower_bound,
    trivial_upper_bound,
)
from .tensor import BoolTensor, hyperplane_counts

_DISPLAY_PRECISION = 50


@dataclass(frozen=True)
class BoundCorrection:
    """The correction factor dividing the permanent in the one-factor bound.

    Exact representation: value ** root == (num / den) ** n.  The root is the
    smallest power making the factor rational (1 for d=2, 2 for d=3, d for
    d >= 4).
    """

    n: int
    d: int
    num: int
    den: int
    root: int

    def approx(self) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = _DISPLAY_PRECISION
            ratio = Decimal(self.num) / Decimal(self.den)
            return +(ratio ** (Decimal(self.n) / Decimal(self.root)))


def bound_correction(n: int, d: int) -> BoundCorrection:
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    if d < 2:
        raise ValidationError(f"d must be at least 2, got {d}")
    if d == 2:
        num, den, root = 1, 1, 1
    elif d == 3:
        num, den, root = 8, 9, 2
    else:
        num = math.factorial(d) ** (2 * d)
        den = d ** (d * d) * math.factorial(d)
        g = math.gcd(num, den)
        num, den, root = num // g, den // g, d
    return BoundCorrection(n, d, num, den, root)


@dataclass(frozen=True)
class CheckReport:
    """Exact verdict for one inequality or identity on one instance.

    The verdict is a pure function of (lhs, rhs): lhs < rhs holds,
    lhs == rhs tight, lhs > rhs violated (for identities only tight or
    violated can occur).  `decimals` carries display strings.
    """

    theorem: str
    instance: str
    lhs: int
    rhs: int
    root: int
    verdict: str
    decimals: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "root": self.root,
            "verdict": self.verdict,
            "decimals": dict(self.decimals),
        }


def _fmt(value: Decimal | int) -> str:
    if isinstance(value, int):
        return str(value)
    return format(value, ".12g")


def _leq_report(theorem: str, instance: str, lhs: int, rhs: int, root: int,
                decimals: dict[str, str]) -> CheckReport:
    verdict = "violated" if lhs > rhs else ("tight" if lhs == rhs else "holds")
    return CheckReport(theorem, instance, lhs, rhs, root, verdict, decimals)


def _eq_report(theorem: str, instance: str, lhs: int, rhs: int,
               decimals: dict[str, str]) -> CheckReport:
    verdict = "tight" if lhs == rhs else "violated"
    return CheckReport(theorem, instance, lhs, rhs, 1, verdict, decimals)


def _describe(G: Hypergraph) -> str:
    return f"{G.d}-uniform hypergraph: n={G.n}, hyperedges={len(G.edges)}"


def check_theorem4(G: Hypergraph, *, budget: NodeBudget | int | None = None,
                   threads: int = 1) -> CheckReport:
    """One-factor count against the corrected d-th root of the adjacency permanent.

    Cleared form: phi^(d*root) * num^n <= per^root * den^n.
    """
    if G.n % G.d != 0:
        raise ValidationError(f"uniformity {G.d} must divide the vertex count {G.n}")
    b = as_budget(budget)
    corr = bound_correction(G.n, G.d)
    phi = count_one_factors(G, budget=b)
    per = permanent(adjacency_tensor(G), budget=b, threads=threads)
    lhs = phi ** (G.d * corr.root) * corr.num**G.n
    rhs = per**corr.root * corr.den**G.n
    decimals = {
        "one_factors": str(phi),
        "permanent": str(per),
        "correction": _fmt(corr.approx()),
        "bound": _fmt(_root_bound(per, corr, G.d)),
    }
    return _leq_report("theorem4", _describe(G), lhs, rhs, corr.root, decimals)


def _root_bound(per: int, corr: BoundCorrection, d: int) -> Decimal:
    """(per / correction) ** (1/d) for display."""
    with localcontext() as ctx:
        ctx.prec = _DISPLAY_PRECISION
        if per == 0:
            return Decimal(0)
        ratio = Decimal(corr.num) / Decimal(corr.den)
        corr_dec = ratio ** (Decimal(corr.n) / Decimal(corr.root))
        return +((Decimal(per) / corr_dec) ** (Decimal(1) / Decimal(d)))


def check_corollary_degrees(G: Hypergraph, *, budget: NodeBudget | int | None = None) -> CheckReport:
    """Degree form of the one-factor bound: phi^d * correction <= (d-1)!^n * prod(degrees)."""
    if G.n % G.d != 0:
        raise ValidationError(f"uniformity {G.d} must divide the vertex count {G.n}")
    b = as_budget(budget)
    corr = bound_correction(G.n, G.d)
    phi = count_one_factors(G, budget=b)
    degree_product = 1
    for r in degrees(G):
        degree_product *= r
    base = math.factorial(G.d - 1) ** G.n * degree_product
    lhs = phi ** (G.d * corr.root) * corr.num**G.n
    rhs = base**corr.root * corr.den**G.n
    decimals = {
        "one_factors": str(phi),
        "degree_product": str(degree_product),
        "correction": _fmt(corr.approx()),
    }
    return _leq_report("corollary3", _describe(G), lhs, rhs, corr.root, decimals)


def check_theorem5_partite(P: PartiteHypergraph, *, budget: NodeBudget | int | None = None,
                           threads: int = 1) -> CheckReport:
    """Balanced partite one-factor bound: phi^d * Q(d) <= per M(G)."""
    G = P.graph
    if not G.is_simple:
        raise ValidationError("the partite bound is stated for simple hypergraphs")
    b = as_budget(budget)
    phi = count_one_factors(G, budget=b)
    q = count_latin_fixed_column(G.d, budget=b)
    per = permanent(adjacency_tensor(G), budget=b, threads=threads)
    lhs = phi**G.d * q
    rhs = per
    decimals = {
        "one_factors": str(phi),
        "fixed_column_latin": str(q),
        "permanent": str(per),
    }
    instance = f"{P.part_size}-balanced {G.d}-partite hypergraph: hyperedges={len(G.edges)}"
    return _leq_report("theorem5", instance, lhs, rhs, 1, decimals)


def check_lemma4(B: BipartiteGraph, *, budget: NodeBudget | int | None = None) -> CheckReport:
    """Decompositions against colorings: T^root * num^n <= P^root * den^n."""
    d = regular_degree(B)
    if B.left != B.right:
        raise ValidationError("the lemma needs parts of equal size")
    n = B.left
    if n % d != 0:
        raise ValidationError(f"the regular degree {d} must divide the part size {n}")
    if not bipartite_connected(B):
        raise ValidationError("the lemma is stated for connected graphs")
    b = as_budget(budget)
    corr = bound_correction(n, d)
    t = count_proper_decompositions(B, budget=b)
    p = count_proper_edge_colorings(B, budget=b)
    lhs = t**corr.root * corr.num**n
    rhs = p**corr.root * corr.den**n
    decimals = {
        "decompositions": str(t),
        "edge_colorings": str(p),
        "correction": _fmt(corr.approx()),
    }
    instance = f"{d}-regular connected bipartite graph: parts of size {n}"
    return _leq_report("lemma4", instance, lhs, rhs, corr.root, decimals)


def check_proof_identities(F: Hypergraph, *, budget: NodeBudget | int | None = None) -> list[CheckReport]:
    """The bookkeeping identities of a one-factorable d-uniform d-factor.

    Checks orientations * multiplicity-product == edge colorings,
    factorizations * multiplicity-product == decompositions, and the
    corrected inequality factorizations <= orientations / correction.
    """
    degs = set(degrees(F))
    if degs != {F.d}:
        raise ValidationError(f"not a {F.d}-uniform {F.d}-factor: degrees {sorted(degs)}")
    b = as_budget(budget)
    phi_ordered = count_factorizations(F, ordered=True, budget=b)
    if phi_ordered == 0:
        raise ValidationError("the identities are stated for one-factorable hypergraphs")
    delta = count_proper_orientations(F, budget=b)
    r = multiplicity_product(F)
    B = bipartite_representation(F)
    p = count_proper_edge_colorings(B, budget=b)
    t = count_proper_decompositions(B, budget=b)
    corr = bound_correction(F.n, F.d)
    instance = _describe(F)
    shared = {
        "orientations": str(delta),
        "factorizations_ordered": str(phi_ordered),
        "multiplicity_product": str(r),
        "edge_colorings": str(p),
        "decompositions": str(t),
    }
    return [
        _eq_report("lemma2", instance, delta * r, p, dict(shared)),
        _eq_report("lemma3", instance, phi_ordered * r, t, dict(shared)),
        _leq_report(
            "proposition3",
            instance,
            phi_ordered**corr.root * corr.num**F.n,
            delta**corr.root * corr.den**F.n,
            corr.root,
            dict(shared, correction=_fmt(corr.approx())),
        ),
    ]


def check_trivial_bound(T: BoolTensor, axis: int = 0, *,
                        budget: NodeBudget | int | None = None,
                        threads: int = 1) -> CheckReport:
    """Permanent against the product of hyperplane unit counts."""
    per = permanent(T, budget=as_budget(budget), threads=threads)
    bound = trivial_upper_bound(T, axis)
    decimals = {"permanent": str(per), "hyperplane_product": str(bound)}
    instance = f"{T.dim}-dimensional tensor of order {T.order}, axis {axis}"
    return _leq_report("trivial", instance, per, bound, 1, decimals)


def check_dow_gibson(T: BoolTensor, axis: int = 0, *,
                     budget: NodeBudget | int | None = None,
                     threads: int = 1) -> CheckReport:
    """Permanent against the factorial-root bound, cleared to the lcm power."""
    bound = dow_gibson_bound(T, axis)
    per = permanent(T, budget=as_budget(budget), threads=threads)
    raised, lcm = bound.raised()
    decimals = {"permanent": str(per), "bound": _fmt(bound.approx())}
    instance = f"3-dimensional tensor of order {T.order}, axis {axis}"
    return _leq_report("dow-gibson", instance, per**lcm, raised, lcm, decimals)


def check_schrijver(matrix: Sequence[Sequence[int]], *,
                    budget: NodeBudget | int | None = None) -> CheckReport:
    """Permanent of a k-regular nonnegative integer matrix against its lower bound.

    Cleared form: bound_numerator <= per * bound_denominator.
    """
    n = len(matrix)
    rows = [list(map(int, row)) for row in matrix]
    row_sums = {sum(row) for row in rows}
    col_sums = {sum(rows[i][j] for i in range(n)) for j in range(n)}
    if len(row_sums | col_sums) != 1:
        raise ValidationError("matrix must have all row and column sums equal")
    k = row_sums.pop()
    if k < 1:
        raise ValidationError("row sums must be positive")
    per = permanent_2d_int(rows, budget=as_budget(budget))
    bound = schrijver_lower_bound(k, n)
    decimals = {
        "permanent": str(per),
        "bound": _fmt(Decimal(bound.numerator) / Decimal(bound.denominator)),
    }
    instance = f"{k}-regular nonnegative integer matrix of order {n}"
    return _leq_report("schrijver", instance, bound.numerator, per * bound.denominator, 1, decimals)


def check_conjecture_d3(G: Hypergraph, *, budget: NodeBudget | int | None = None,
                        threads: int = 1) -> CheckReport:
    """Experimental: phi^3 <= per M(G) for 3-uniform hypergraphs.

    A counterexample hunt; a `holds` verdict proves nothing about the
    general statement.
    """
    if G.d != 3:
        raise ValidationError("this check is specific to 3-uniform hypergraphs")
    if G.n % 3 != 0:
        raise ValidationError("the vertex count must be divisible by 3")
    b = as_budget(budget)
    phi = count_one_factors(G, budget=b)
    per = permanent(adjacency_tensor(G), budget=b, threads=threads)
    decimals = {"one_factors": str(phi), "permanent": str(per)}
    instance = _describe(G) + "; experimental counterexample hunt, proves nothing"
    return _leq_report("conjecture-d3", instance, phi**3, per, 1, decimals)


def complete_one_factor_count(n: int, d: int) -> int:
    """Closed form n! / (d!^(n/d) * (n/d)!) for the complete d-uniform hypergraph."""
    if not 1 <= d <= n:
        raise ValidationError(f"need 1 <= d <= n, got d={d}, n={n}")
    if n % d != 0:
        raise ValidationError(f"uniformity {d} must divide the vertex count {n}")
    groups = n // d
    return math.factorial(n) // (math.factorial(d) ** groups * math.factorial(groups))


def factorization_bound_main_terms(n: int, d: int, *,
                                   exact_budget: int = 2_000_000) -> dict:
    """Display-only main terms of the factorization-count bounds for complete hypergraphs.

    Evaluates each bound with its vanishing correction factor dropped, so
    nothing here is a certified inequality; the report says so.  Exact small
    ordered/unordered factorization counts are attached when they fit in a
    small node budget (both conventions are shown because the classical
    counts are quoted in either).
    """
    if d < 2:
        raise ValidationError(f"d must be at least 2, got {d}")
    if n < d or n % d != 0:
        raise ValidationError(f"need d <= n with d | n, got d={d}, n={n}")
    t = math.comb(n - 1, d - 1)
    hyperplane_ones = [(t - i) * math.factorial(d - 1) for i in range(t)]
    corr = bound_correction(n, d)
    with localcontext() as ctx:
        ctx.prec = _DISPLAY_PRECISION
        exponent = Decimal(n**d) / Decimal(math.factorial(d))
        e = Decimal(1).exp()
        crude_base = Decimal(n ** (d - 1)) / Decimal(math.factorial(d - 1))
        crude = crude_base**exponent
        corr_nth_root = (Decimal(corr.num) / Decimal(corr.den)) ** (
            Decimal(1) / Decimal(corr.root)
        )
        refined_base = Decimal(n ** (d - 1)) / (corr_nth_root * e**d)
        refined = refined_base**exponent
        scale = n ** (d - 2)
        ceil_ratio = math.ceil(t * math.factorial(d - 1) / scale)
        permanent_main = Decimal(math.factorial(n)) ** (d - 2) * (
            Decimal(math.factorial(ceil_ratio)) ** (Decimal(n) / Decimal(ceil_ratio))
        )
        if d == 3:
            explicit_base = Decimal(3 * n**2) / (Decimal(2) ** Decimal("1.5") * e**3)
            explicit = explicit_base**exponent
        elif d >= 4:
            explicit_base = (
                (Decimal(d) / e) ** d
                * Decimal(n ** (d - 1))
                / Decimal(math.factorial(d)) ** (2 - Decimal(1) / Decimal(d))
            )
            explicit = explicit_base**exponent
        else:
            explicit = None
        terms = {
            "crude_upper": _fmt(+crude),
            "permanent_refined_upper": _fmt(+refined),
            "adjacency_permanent_main": _fmt(+permanent_main),
        }
        if explicit is not None:
            terms["refined_upper_explicit"] = _fmt(+explicit)
        if d == 2:
            half_square = Decimal(n**2) / 2
            terms["complete_graph_lower"] = _fmt(+((Decimal(n) / (4 * e**2)) ** half_square))
            terms["complete_graph_upper"] = _fmt(+((Decimal(n) / e**2) ** half_square))

    def _try_exact(ordered: bool) -> str | None:
        try:
            value = count_factorizations(
                complete_hypergraph(n, d), ordered=ordered, budget=NodeBudget(exact_budget)
            )
        except BudgetExceededError:
            return None
        return str(value)

    return {
        "n": n,
        "d": d,
        "certified": False,
        "note": "main terms only: vanishing correction factors dropped, not certified bounds",
        "factors_per_factorization": t,
        "hyperplane_ones_by_removed_factors": hyperplane_ones,
        "terms": terms,
        "exact_ordered_factorizations": _try_exact(True),
        "exact_unordered_factorizations": _try_exact(False),
    }
