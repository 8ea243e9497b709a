"""Command-line front end: parse inputs, dispatch computations, emit reports.

Exit codes: 0 success (all verdicts hold), 1 a verdict was violated,
2 input error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .bounds import (
    CheckReport,
    check_conjecture_d3,
    check_corollary_degrees,
    check_dow_gibson,
    check_lemma4,
    check_proof_identities,
    check_schrijver,
    check_theorem4,
    check_theorem5_partite,
    check_trivial_bound,
    factorization_bound_main_terms,
)
from .budget import DEFAULT_NODE_BUDGET, BudgetExceededError, NodeBudget
from .errors import ValidationError
from .factorization import count_factorizations, count_one_factors, count_proper_orientations
from .hypergraph import (
    balanced_partite_hypergraph,
    bipartite_representation,
    complete_hypergraph,
    complete_partite_hypergraph,
    format_hypergraph,
    parse_hypergraph,
)
from .latin import all_distinct_tensor, count_latin_fixed_column, count_latin_squares
from .permanent import permanent
from .tensor import format_tensor, hyperplane_counts, parse_tensor

VERIFY_CHOICES = (
    "theorem4",
    "theorem5",
    "lemma4",
    "identities",
    "corollary3",
    "schrijver",
    "dow-gibson",
    "trivial",
    "conjecture-d3",
)


def _positive(value: str) -> int:
    number = int(value)
    if number <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfact",
        description="Exact permanents, hypergraph one-factor counts and bound verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive, default=DEFAULT_NODE_BUDGET,
                        help="node budget for the searches (default 10^9)")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker threads for the permanent search (default: all cores)")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("permanent", parents=[common], help="permanent of a tensor file")
    p.add_argument("file", nargs="?", default="-", help="tensor file ('-' or omitted: stdin)")
    p.add_argument("--axis", type=int, default=None, help="also report hyperplane counts of this axis")

    p = sub.add_parser("factors", parents=[common], help="count one-factors of a hypergraph")
    p.add_argument("file", nargs="?", default="-")

    p = sub.add_parser("factorizations", parents=[common], help="count one-factorizations")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--unordered", action="store_true",
                   help="count unordered partitions instead of ordered sequences")

    p = sub.add_parser("orientations", parents=[common], help="count proper orientations")
    p.add_argument("file", nargs="?", default="-")

    p = sub.add_parser("latin", parents=[common], help="latin square counts")
    p.add_argument("-n", type=_positive, required=True, help="square order")

    p = sub.add_parser("u-tensor", parents=[common],
                       help="emit the order-d all-distinct tensor in text format")
    p.add_argument("-d", type=_positive, required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate hypergraphs on stdout")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    g = gen_sub.add_parser("complete", parents=[common], help="complete d-uniform hypergraph")
    g.add_argument("-n", type=_positive, required=True)
    g.add_argument("-d", type=_positive, required=True)
    g = gen_sub.add_parser("partite", parents=[common],
                           help="complete k-balanced d-partite hypergraph")
    g.add_argument("-k", type=_positive, required=True, help="part size")
    g.add_argument("-d", type=_positive, required=True, help="number of parts")

    p = sub.add_parser("verify", parents=[common], help="verify a bound or identity exactly")
    p.add_argument("check", choices=VERIFY_CHOICES)
    p.add_argument("file", nargs="?", default=None,
                   help="instance file (hypergraph or tensor, depending on the check)")
    p.add_argument("--axis", type=int, default=0, help="hyperplane direction for tensor bounds")
    p.add_argument("--random", type=_positive, default=None, metavar="COUNT",
                   help="conjecture-d3 only: check COUNT random instances instead of a file")
    p.add_argument("--vertices", type=_positive, default=6,
                   help="vertex count for random instances (default 6)")
    p.add_argument("--edges", type=_positive, default=None,
                   help="edge count for random instances (default: half of all)")
    p.add_argument("--seed", type=int, default=0, help="seed for random instances")

    p = sub.add_parser("bounds", parents=[common],
                       help="display-only asymptotic main terms for complete hypergraphs")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-d", type=_positive, required=True)

    return parser


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_int_matrix(text: str) -> list[list[int]]:
    """Tensor text format with d=2, repeated entry lines accumulating integer values."""
    tokens: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    if not tokens or len(tokens[0]) != 2:
        raise ValidationError("expected a 'd n' header")
    d, n = (int(v) for v in tokens[0])
    if d != 2:
        raise ValidationError(f"integer matrices use the 2-dimensional format, got d={d}")
    matrix = [[0] * n for _ in range(n)]
    for parts in tokens[1:]:
        if len(parts) != 2:
            raise ValidationError(f"expected 2 coordinates, got {len(parts)}")
        i, j = (int(v) for v in parts)
        if not (0 <= i < n and 0 <= j < n):
            raise ValidationError(f"entry ({i}, {j}) outside 0..{n - 1}")
        matrix[i][j] += 1
    return matrix


def _emit(args: argparse.Namespace, payload: dict | list, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _report_lines(report: CheckReport) -> list[str]:
    lines = [
        f"{report.theorem}: {report.verdict.upper()}",
        f"  instance: {report.instance}",
        f"  exact comparison (root {report.root}): {report.lhs} <= {report.rhs}",
    ]
    for key, value in report.decimals.items():
        lines.append(f"  {key} = {value}")
    if report.verdict == "violated":
        lines.append("  *** VIOLATED: exact counterexample to a proved statement — recheck the input ***")
    return lines


def exit_code_for(reports: list[CheckReport]) -> int:
    return 1 if any(r.verdict == "violated" for r in reports) else 0


def _cmd_verify(args: argparse.Namespace, budget: NodeBudget, threads: int) -> int:
    reports: list[CheckReport] = []
    if args.check == "conjecture-d3" and args.random is not None:
        from itertools import combinations

        from .randgen import random_simple_hypergraph

        n = args.vertices
        if n % 3 != 0:
            raise ValidationError("--vertices must be divisible by 3 for conjecture-d3")
        pool_size = len(list(combinations(range(n), 3)))
        rng = random.Random(args.seed)
        for _ in range(args.random):
            m = args.edges if args.edges is not None else max(1, pool_size // 2)
            G = random_simple_hypergraph(rng, n, 3, m)
            reports.append(check_conjecture_d3(G, budget=budget, threads=threads))
    else:
        if args.file is None:
            raise ValidationError("this check needs an instance file (or --random for conjecture-d3)")
        text = _read_text(args.file)
        if args.check in ("dow-gibson", "trivial"):
            tensor = parse_tensor(text)
            if args.check == "trivial":
                reports.append(check_trivial_bound(tensor, args.axis, budget=budget, threads=threads))
            else:
                reports.append(check_dow_gibson(tensor, args.axis, budget=budget, threads=threads))
        elif args.check == "schrijver":
            reports.append(check_schrijver(_read_int_matrix(text), budget=budget))
        else:
            G = parse_hypergraph(text)
            if args.check == "theorem4":
                reports.append(check_theorem4(G, budget=budget, threads=threads))
            elif args.check == "corollary3":
                reports.append(check_corollary_degrees(G, budget=budget))
            elif args.check == "theorem5":
                if G.n % G.d != 0:
                    raise ValidationError("a balanced partite hypergraph needs d | n")
                P = balanced_partite_hypergraph(G.n // G.d, G.d, G.edges)
                reports.append(check_theorem5_partite(P, budget=budget, threads=threads))
            elif args.check == "lemma4":
                reports.append(check_lemma4(bipartite_representation(G), budget=budget))
            elif args.check == "identities":
                reports.extend(check_proof_identities(G, budget=budget))
            elif args.check == "conjecture-d3":
                reports.append(check_conjecture_d3(G, budget=budget, threads=threads))
    lines: list[str] = []
    for report in reports:
        lines.extend(_report_lines(report))
    payload: dict | list = [r.to_dict() for r in reports]
    if len(reports) == 1:
        payload = reports[0].to_dict()
    _emit(args, payload, lines)
    return exit_code_for(reports)


def _dispatch(args: argparse.Namespace) -> int:
    budget = NodeBudget(args.budget)
    threads = args.threads if args.threads is not None else (os.cpu_count() or 1)

    if args.command == "permanent":
        tensor = parse_tensor(_read_text(args.file))
        value = permanent(tensor, budget=budget, threads=threads)
        payload = {
            "command": "permanent",
            "dim": tensor.dim,
            "order": tensor.order,
            "unit_entries": len(tensor.ones),
            "permanent": str(value),
        }
        lines = [f"permanent = {value}"]
        if args.axis is not None:
            counts = hyperplane_counts(tensor, args.axis)
            payload["axis"] = args.axis
            payload["hyperplane_ones"] = list(counts)
            lines.append(f"hyperplane ones (axis {args.axis}) = {' '.join(map(str, counts))}")
        _emit(args, payload, lines)
        return 0

    if args.command == "factors":
        G = parse_hypergraph(_read_text(args.file))
        value = count_one_factors(G, budget=budget)
        _emit(args, {"command": "factors", "count": str(value)}, [f"one-factors = {value}"])
        return 0

    if args.command == "factorizations":
        G = parse_hypergraph(_read_text(args.file))
        value = count_factorizations(G, ordered=not args.unordered, budget=budget)
        convention = "unordered" if args.unordered else "ordered"
        payload = {"command": "factorizations", "convention": convention, "count": str(value)}
        _emit(args, payload, [f"one-factorizations ({convention}) = {value}"])
        return 0

    if args.command == "orientations":
        G = parse_hypergraph(_read_text(args.file))
        value = count_proper_orientations(G, budget=budget)
        _emit(args, {"command": "orientations", "count": str(value)},
              [f"proper orientations = {value}"])
        return 0

    if args.command == "latin":
        total = count_latin_squares(args.n, budget=budget)
        fixed = count_latin_fixed_column(args.n, budget=budget)
        payload = {"command": "latin", "order": args.n, "squares": str(total),
                   "fixed_column_squares": str(fixed)}
        _emit(args, payload, [f"latin squares           L = {total}",
                              f"fixed-column squares    Q = {fixed}"])
        return 0

    if args.command == "u-tensor":
        sys.stdout.write(format_tensor(all_distinct_tensor(args.d)))
        return 0

    if args.command == "gen":
        if args.generator == "complete":
            G = complete_hypergraph(args.n, args.d)
        else:
            G = complete_partite_hypergraph(args.k, args.d).graph
        sys.stdout.write(format_hypergraph(G))
        return 0

    if args.command == "verify":
        return _cmd_verify(args, budget, threads)

    if args.command == "bounds":
        report = factorization_bound_main_terms(args.n, args.d)
        lines = [
            f"complete {args.d}-uniform hypergraph on {args.n} vertices",
            f"  note: {report['note']}",
            f"  factors per factorization t = {report['factors_per_factorization']}",
            f"  hyperplane ones after removing i factors: "
            f"{' '.join(map(str, report['hyperplane_ones_by_removed_factors'][:8]))}"
            + (" ..." if report["factors_per_factorization"] > 8 else ""),
        ]
        for key, value in report["terms"].items():
            lines.append(f"  {key} = {value}")
        lines.append(f"  exact ordered factorizations   = {report['exact_ordered_factorizations']}")
        lines.append(f"  exact unordered factorizations = {report['exact_unordered_factorizations']}")
        _emit(args, report, lines)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
