"""Command line entry point: ``loopcutset {gen,fvs,loopcutset,bench}``.

Exit status is 0 on success, 2 for parse or validation errors and 3 for
infeasible configurations.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .baselines import brute_force_min_wfvs, greedy_wfvs
from .bench import ALGORITHMS, AlgoSpec, ExperimentConfig, emit_table, gen_random_dag, run_suite, solve
from .formats import FormatError, read_bn, read_wgr, write_bn
from .randomized import AlgorithmParams, CutsetResult, InfeasibleError, wra

EXIT_PARSE = 2
EXIT_INFEASIBLE = 3


class Infeasible(Exception):
    pass


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _common(p: argparse.ArgumentParser, multi_algo: bool = False) -> None:
    p.add_argument("--seed", type=_u64, default=0)
    if multi_algo:
        p.add_argument("--algo", choices=ALGORITHMS, action="append",
                       help="repeat to compare; default: wra then greedy")
    else:
        p.add_argument("--algo", choices=ALGORITHMS, default="wra")
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--max-iters", type=int, default=300)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def _shape(p: argparse.ArgumentParser, graphs: bool) -> None:
    p.add_argument("--vertices", type=int, default=15)
    p.add_argument("--edges", type=int, default=25)
    p.add_argument("--domains", type=int, nargs=2, default=(2, 6), metavar=("LO", "HI"))
    if graphs:
        p.add_argument("--graphs", type=int, default=100)
    else:
        p.add_argument("--index", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loopcutset", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write one random network in .bn format")
    _shape(p, graphs=False)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--out", default=None)

    p = sub.add_parser("fvs", help="weighted feedback vertex set of a .wgr graph")
    p.add_argument("path")
    _common(p)

    p = sub.add_parser("loopcutset", help="minimum-weight loop cutset of a .bn network")
    p.add_argument("path")
    _common(p)

    p = sub.add_parser("bench", help="compare algorithms on random networks")
    _shape(p, graphs=True)
    _common(p, multi_algo=True)
    return parser


def _write(data: bytes, out) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _single_record(algo: str, res: CutsetResult, fmt: str) -> bytes:
    ids = sorted(res.cutset)
    if fmt == "json":
        rec = (f'{{"algo": {json.dumps(algo)}, "weight": {res.weight:.6f}, "size": {res.size}, '
               f'"iterations": {res.iterations_used}, "seed": {res.seed}, "cutset": {json.dumps(ids)}}}')
        return (rec + "\n").encode()
    return (f"algo,weight,size,iterations,seed,cutset\n"
            f"{algo},{res.weight:.6f},{res.size},{res.iterations_used},{res.seed},"
            f"{' '.join(map(str, ids))}\n").encode()


def _run(args) -> int:
    if args.command == "gen":
        try:
            cfg = ExperimentConfig(args.vertices, args.edges, *args.domains, 1, seed=args.seed)
        except ValueError as exc:
            raise Infeasible(str(exc)) from None
        _write(write_bn(gen_random_dag(cfg, args.index)).encode(), args.out)
        return 0

    if args.command == "bench":
        names = args.algo or ["wra", "greedy"]
        try:
            AlgorithmParams(c=args.c, max_iters=args.max_iters, seed=args.seed)
            specs = [AlgoSpec(n, args.c, args.max_iters) for n in names]
            cfg = ExperimentConfig(args.vertices, args.edges, *args.domains, args.graphs,
                                   specs, args.seed)
        except ValueError as exc:
            raise Infeasible(str(exc)) from None
        rows, summary = run_suite(cfg)
        _write(emit_table(rows, args.format), args.out)
        print(summary.format(), file=sys.stderr)
        return 0

    try:
        AlgorithmParams(c=args.c, max_iters=args.max_iters, seed=args.seed)
    except ValueError as exc:
        raise Infeasible(str(exc)) from None
    spec = AlgoSpec(args.algo, args.c, args.max_iters)
    if args.command == "fvs":
        g = read_wgr(args.path)
        if spec.name == "wra":
            res = wra(g, spec.c, spec.max_iters, args.seed)
        elif spec.name == "greedy":
            res = greedy_wfvs(g)
        else:
            o = brute_force_min_wfvs(g)
            res = CutsetResult(o.optimum_set, o.optimum_weight, len(o.optimum_set), 1)
        res = CutsetResult(res.cutset, res.weight, res.size, res.iterations_used, args.seed)
    else:
        res = solve(read_bn(args.path), spec, args.seed)
    _write(_single_record(spec.name, res, args.format), args.out)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Infeasible, InfeasibleError, ValueError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
