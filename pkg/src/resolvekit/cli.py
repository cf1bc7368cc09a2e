"""Command-line front end.

Verbs: gen, dist, verify, solve, witness, audit, reproduce. Output on stdout
is byte-identical for identical invocations (timings only appear on stderr
behind --stats). Exit statuses: 0 success/confirmed, 1 refuted or
verification false, 2 usage or domain error, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import generators, graphs, solvers
from .generators import VertexLabel, build_ccc, build_cycle, build_lcg, id_of
from .graphs import Graph, apsp, read_graph, write_graph
from .resolving import is_doubly_resolving, is_resolving, is_strong_resolving
from .solvers import (
    Budget,
    BudgetExceededError,
    KIND_DOUBLY,
    KIND_RESOLVING,
    KIND_STRONG,
    METHOD_VC,
    solve_min_doubly,
    solve_min_resolving,
    solve_min_strong_direct,
    solve_min_strong_vc,
)
from .witnesses import (
    FAMILY_CCC,
    FAMILY_LCG,
    REFUTED,
    REPORT_HEADER,
    audit_claim,
    ccc_witness,
    doubly_small_cycle_data_point,
    lcg_witness,
    reproduce,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_VERIFIERS = {
    KIND_RESOLVING: is_resolving,
    KIND_DOUBLY: is_doubly_resolving,
    KIND_STRONG: is_strong_resolving,
}


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=(FAMILY_CCC, FAMILY_LCG), help="generated family")
    parser.add_argument("--n", type=int, help="family size parameter n")
    parser.add_argument("--k", type=int, help="cycle-family layer count k")
    parser.add_argument("--graph", metavar="FILE", help="read the graph from a file instead")
    parser.add_argument(
        "--graph-format",
        choices=graphs.FORMATS,
        default=graphs.EDGE_LIST,
        help="format of --graph input",
    )


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-subsets", type=int, default=Budget().max_subsets)
    parser.add_argument("--timeout-seconds", type=float, default=None)


def _budget(args: argparse.Namespace) -> Budget:
    return Budget(max_subsets=args.max_subsets, timeout_seconds=args.timeout_seconds)


def _family_graph(family: str, n: int | None, k: int | None) -> Graph:
    if n is None:
        raise ValueError("--n is required for a generated family")
    if family == FAMILY_CCC:
        if k is not None:
            raise ValueError("--k does not apply to the cube family")
        return build_ccc(n)
    if k is None:
        raise ValueError("--k is required for the cycle family")
    return build_lcg(n, k)


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.graph is not None:
        if args.family is not None:
            raise ValueError("give either --graph or --family, not both")
        with open(args.graph, encoding="utf-8") as handle:
            g = read_graph(handle.read(), args.graph_format)
        labels_path = getattr(args, "labels", None)
        if labels_path:
            with open(labels_path, encoding="utf-8") as handle:
                g = generators.with_labels(g, generators.read_labels_tsv(handle.read()))
        return g
    if args.family is None:
        raise ValueError("a graph source is required: --family or --graph")
    return _family_graph(args.family, args.n, args.k)


def _parse_set(g: Graph, text: str, kind: str, args: argparse.Namespace) -> tuple[int, ...]:
    """Comma-separated ids, structured labels layer:branch:unit:position, or
    @witness for the family's built-in witness set."""
    if text == "@witness":
        if args.family == FAMILY_CCC:
            return ccc_witness(kind, args.n, g=g)
        if args.family == FAMILY_LCG:
            return lcg_witness(kind, args.n, args.k, g=g)
        raise ValueError("@witness needs a generated --family graph")
    members = []
    for token in text.split(","):
        token = token.strip()
        if ":" in token:
            members.append(id_of(g, VertexLabel.parse(token)))
        else:
            try:
                members.append(int(token))
            except ValueError:
                raise ValueError(f"bad vertex token {token!r}") from None
    return tuple(members)


def _print_stats(args: argparse.Namespace, result: solvers.SolveResult) -> None:
    if getattr(args, "stats", False):
        print(
            f"stats: subsets={result.stats.subsets_examined} "
            f"elapsed={result.stats.elapsed_seconds:.3f}s "
            f"restriction={result.stats.restriction}",
            file=sys.stderr,
        )


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family in (FAMILY_CCC, FAMILY_LCG):
        g = _family_graph(args.family, args.n, args.k)
    else:  # cycle: plain n-cycle, mostly for ad-hoc experiments
        g = build_cycle(args.n)
    sys.stdout.write(write_graph(g, args.format))
    if args.labels_out:
        with open(args.labels_out, "w", encoding="utf-8") as handle:
            handle.write(generators.write_labels_tsv(g))
    return EXIT_OK


def _cmd_dist(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    dist = apsp(g)
    for row in dist.rows:
        print("\t".join(str(x) for x in row))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    dist = apsp(g)
    members = _parse_set(g, args.set, args.kind, args)
    ok = _VERIFIERS[args.kind](dist, members)
    print(f"{'true' if ok else 'false'} {len(members)}")
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    dist = apsp(g)
    budget = _budget(args)
    if args.method == METHOD_VC:
        if args.kind != KIND_STRONG:
            raise ValueError("--method vc-reduction only solves the strong kind")
        result = solve_min_strong_vc(g, budget=budget, dist=dist)
    elif args.kind == KIND_RESOLVING:
        result = solve_min_resolving(
            g, args.method, family_pruned=args.family_pruned, budget=budget, dist=dist
        )
    elif args.kind == KIND_DOUBLY:
        result = solve_min_doubly(
            g, args.method, family_pruned=args.family_pruned, budget=budget, dist=dist
        )
    else:
        result = solve_min_strong_direct(g, args.method, budget=budget, dist=dist)
    # re-verify before printing; a solver bug must not survive to output
    if not _VERIFIERS[args.kind](dist, result.witness):
        raise RuntimeError(f"solver returned a witness that fails the {args.kind} verifier")
    witness = ",".join(str(v) for v in result.witness)
    print(
        f"kind={result.kind} optimum={result.optimum} witness={witness} "
        f"method={result.method} restriction={result.stats.restriction}"
    )
    _print_stats(args, result)
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    if args.family == FAMILY_LCG and args.k is None:
        raise ValueError("--k is required for the cycle family")
    g = _family_graph(args.family, args.n, args.k)
    if args.family == FAMILY_CCC:
        members = ccc_witness(args.kind, args.n, g=g)
    else:
        members = lcg_witness(args.kind, args.n, args.k, g=g)
    if args.pretty:
        for v in members:
            print(f"{v}\t{g.labels[v]}")
    else:
        print(",".join(str(v) for v in members))
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    if args.family == FAMILY_LCG and args.k is None:
        raise ValueError("--k is required for the cycle family")
    params = (args.n,) if args.family == FAMILY_CCC else (args.n, args.k)
    claim = audit_claim(args.family, args.kind, params, _budget(args))
    print(REPORT_HEADER)
    print(claim.row())
    if claim.note:
        print(f"# {claim.note}")
    return EXIT_FALSE if claim.verified == REFUTED else EXIT_OK


def _cmd_reproduce(args: argparse.Namespace) -> int:
    budget = _budget(args)
    claims = reproduce(budget)
    print(REPORT_HEADER)
    refuted = False
    for claim in claims:
        print(claim.row())
        refuted = refuted or claim.verified == REFUTED
    data_point = doubly_small_cycle_data_point(budget=budget)
    print(f"# data point, no closed-form claim: lcg doubly n=3,k=2 optimum={data_point.optimum}")
    return EXIT_FALSE if refuted else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resolvekit",
        description=(
            "Generate layered cube/cycle family graphs, verify resolving / "
            "doubly resolving / strong resolving sets, run the exact solvers, "
            "and audit the closed-form claims."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a family graph")
    gen.add_argument("family", choices=(FAMILY_CCC, FAMILY_LCG, "cycle"))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--format", choices=graphs.FORMATS, default=graphs.EDGE_LIST)
    gen.add_argument("--labels-out", metavar="FILE", default=None)
    gen.set_defaults(func=_cmd_gen)

    dist = sub.add_parser("dist", help="print the all-pairs distance matrix as TSV")
    _add_graph_source(dist)
    dist.set_defaults(func=_cmd_dist)

    verify = sub.add_parser("verify", help="check a vertex set against a verifier")
    _add_graph_source(verify)
    verify.add_argument("--labels", metavar="FILE", help="label sidecar for --graph input")
    verify.add_argument("--kind", choices=solvers.KINDS, required=True)
    verify.add_argument("--set", required=True, help="ids, labels, or @witness")
    verify.set_defaults(func=_cmd_verify)

    solve = sub.add_parser("solve", help="exact minimization")
    _add_graph_source(solve)
    solve.add_argument("--labels", metavar="FILE", help="label sidecar for --graph input")
    solve.add_argument("--kind", choices=solvers.KINDS, required=True)
    solve.add_argument(
        "--method",
        choices=(solvers.METHOD_NAIVE, solvers.METHOD_PRUNED, METHOD_VC),
        default=solvers.METHOD_PRUNED,
    )
    solve.add_argument("--family-pruned", action="store_true")
    solve.add_argument("--stats", action="store_true", help="search statistics on stderr")
    _add_budget(solve)
    solve.set_defaults(func=_cmd_solve)

    witness = sub.add_parser("witness", help="print a built-in closed-form witness set")
    witness.add_argument("--family", choices=(FAMILY_CCC, FAMILY_LCG), required=True)
    witness.add_argument("--n", type=int, required=True)
    witness.add_argument("--k", type=int, default=None)
    witness.add_argument("--kind", choices=solvers.KINDS, required=True)
    witness.add_argument("--pretty", action="store_true")
    witness.set_defaults(func=_cmd_witness)

    audit = sub.add_parser("audit", help="audit one closed-form claim")
    audit.add_argument("--family", choices=(FAMILY_CCC, FAMILY_LCG), required=True)
    audit.add_argument("--n", type=int, required=True)
    audit.add_argument("--k", type=int, default=None)
    audit.add_argument("--kind", choices=solvers.KINDS, required=True)
    _add_budget(audit)
    audit.set_defaults(func=_cmd_audit)

    repro = sub.add_parser("reproduce", help="audit the full claim table")
    _add_budget(repro)
    repro.set_defaults(func=_cmd_reproduce)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"resolvekit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"resolvekit: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
