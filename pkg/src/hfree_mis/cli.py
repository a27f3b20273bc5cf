"""Command-line interface: solve, kernel, classify, generate, oracle.

Exit codes: 0 completed, 1 input error, 2 budget exceeded.  Every report
carries the seed it ran under; identical seed and flags give identical
output.  The default seed comes from HFREE_MIS_SEED.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from .classify import verdict
from .errors import BudgetExceededError, InputFormatError, PatternViolationError, UnsupportedPatternError
from .graph import Graph
from .hardness import build_construction, gen_grid_tiling, lift_solution, or_compose
from .io import emit_graph, parse_graph
from .kernelize import kernel_krfree, kernel_paw_like, turing_kernel_star
from .oracle import alpha_exact
from .patterns import parse_pattern
from .solver import SolveConfig, solve_hfree


def _read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _default_seed() -> int:
    return int(os.environ.get("HFREE_MIS_SEED", "0"))


def cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    res = alpha_exact(g, budget=args.budget)
    print(f"alpha = {res.alpha}")
    print(f"witness = {' '.join(str(v + 1) for v in res.witness)}")
    print(f"nodes = {res.nodes_used}")
    return 0


def cmd_solve(args) -> int:
    g = _read_graph(args.input)
    config = SolveConfig(faithful=args.mode == "faithful",
                         separation_rounds=args.repetitions,
                         gem_rounds=max(1, args.repetitions // 32),
                         budget=args.budget)
    out = solve_hfree(g, args.k, parse_pattern(args.pattern), seed=args.seed, config=config)
    print(f"seed = {args.seed}")
    print(f"method = {out.method}")
    decision = "yes" if out.decision else "no"
    print(f"independent set of size {args.k}: {decision}")
    if out.witness:
        print(f"witness = {' '.join(str(v + 1) for v in sorted(out.witness))}")
    for note in out.notes:
        print(f"note: {note}")
    return 0


def cmd_kernel(args) -> int:
    g = _read_graph(args.input)
    if args.family == "krfree":
        res = kernel_krfree(g, args.k, args.r)
    elif args.family == "paw":
        res = kernel_paw_like(g, args.k, args.r)
    elif args.family == "turing":
        out = turing_kernel_star(g, args.k, args.r)
        print(f"subinstances = {len(out.subinstances)} (combined by disjunction)")
        for note in out.notes:
            print(f"note: {note}")
        if args.output:
            parts = []
            for idx, (sub, kk) in enumerate(out.subinstances):
                parts.append(emit_graph(sub, comments=(f"subinstance {idx} parameter {kk}",)))
            _write(args.output, "".join(parts))
        return 0
    else:
        raise ValueError(args.family)
    print(f"verdict = {res.verdict}")
    for note in res.trace:
        print(f"rule: {note}")
    if res.verdict == "reduced":
        print(f"reduced: n = {res.graph.n}, k = {res.k_out}")
        if args.output:
            kept = " ".join(str(v + 1) for v in res.kept_vertices)
            _write(args.output, emit_graph(res.graph, comments=(f"kept {kept}",)))
    elif res.verdict == "solved_yes":
        print(f"witness = {' '.join(str(v + 1) for v in sorted(res.witness))}")
    return 0


def cmd_classify(args) -> int:
    h = parse_pattern(args.pattern)
    v = verdict(h)
    print(f"pattern = {args.pattern} ({h.graph.n} vertices)")
    print(f"complexity = {v.complexity}")
    print(f"kernel = {v.kernel}")
    for rule in v.rules_fired:
        print(f"rule: {rule}")
    return 0


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "gridtiling":
        gt, solution = gen_grid_tiling(args.k, args.m, args.nt, args.planted, rng)
        out = build_construction(gt, args.variant, args.p)
        comments = [
            f"seed {args.seed}",
            f"grid tiling k={gt.k} m={gt.m} tile size={gt.tile_size}",
            f"variant {out.variant} p={out.p} target independent set k'={out.k_prime}",
        ]
        for i in range(gt.k):
            for j in range(gt.k):
                comments.append(f"tile {i} {j}: " + " ".join(f"{a},{b}" for a, b in gt.tiles[i][j]))
        if solution is not None:
            witness = lift_solution(solution, out)
            comments.append("planted witness: " + " ".join(str(v + 1) for v in witness))
        for v, lab in enumerate(out.graph.labels):
            i, j, key, a = lab
            comments.append(f"vertex {v + 1}: gadget ({i},{j}) clique {key} index {a}")
        _write(args.output, emit_graph(out.graph, comments=tuple(comments)))
        return 0
    if args.kind == "orcompose":
        graphs = [_read_graph(p) for p in args.inputs]
        joined = or_compose(graphs)
        comments = (f"join composition of {len(graphs)} graphs",
                    "alpha equals the maximum alpha of the inputs")
        _write(args.output, emit_graph(joined, comments=comments))
        return 0
    raise ValueError(args.kind)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfree-mis",
                                     description="Maximum Independent Set toolkit for H-free graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", help="exact alpha by branch and bound")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("solve", help="decide an independent set of size k in an H-free graph")
    p.add_argument("--input", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--mode", choices=("desk", "faithful"), default="desk")
    p.add_argument("--repetitions", type=int, default=256)
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernel", help="kernelize an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--family", choices=("krfree", "paw", "turing"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("classify", help="complexity verdict for a pattern")
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="hardness and composition instances")
    p.add_argument("--kind", choices=("gridtiling", "orcompose"), required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--nt", type=int, default=2)
    p.add_argument("--variant", choices=("first", "second", "third"), default="first")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--planted", action="store_true")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--inputs", nargs="*", default=[])
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputFormatError, UnsupportedPatternError, PatternViolationError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
