"""Command-line surface: gen, run, verify, and bench subcommands.

Exit codes: 0 success, 2 bad spec/input/file, 3 odd-degree rejection,
4 connectivity rejection; verify reports a failed check as 1 with the
failure name on stderr.  All paths accept ``-`` for stdin/stdout so that
``gen | run | verify`` pipelines compose.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
import time
from contextlib import contextmanager

from . import euler_core, gen, stream_io, verify
from .cycle_forest import HAS_COMPILED, resolve_backend
from .errors import (EdgeStreamError, GenerationError, NotConnectedError,
                     OddDegreeError)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ODD_DEGREE = 3
EXIT_NOT_CONNECTED = 4


@contextmanager
def _open_in(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, "r", encoding="ascii") as f:
            yield f


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii") as f:
            yield f


def cmd_gen(args) -> int:
    spec = gen.GenSpec(n=args.nodes, target_m=args.edges, seed=args.seed,
                       fault=args.fault, order=args.order)
    try:
        graph = gen.generate(spec)
    except GenerationError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _open_out(args.out) as sink:
        stream_io.write_edge_stream(sink, graph.header, graph.edges)
    return EXIT_OK


def cmd_run(args) -> int:
    try:
        with _open_in(args.input) as src, _open_out(args.output) as dst:
            reader = stream_io.open_edge_reader(src)
            writer = stream_io.open_triple_writer(dst)
            stats = euler_core.run(reader, writer, mode=args.mode,
                                   backend=args.backend)
            writer.close()
    except FileNotFoundError as exc:
        print(f"run: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeStreamError as exc:
        print(f"run: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OddDegreeError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_ODD_DEGREE
    except NotConnectedError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_NOT_CONNECTED
    if args.stats:
        with _open_out(args.stats) as f:
            json.dump(stats.to_json(), f, indent=2)
            f.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with _open_in(args.graph) as src:
            reader = stream_io.open_edge_reader(src)
            n = reader.header.node_count
            edges = list(reader)
        with _open_in(args.tour) as src:
            triples = stream_io.read_triples(src)
    except (FileNotFoundError, EdgeStreamError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = verify.verify_tour(triples, n, edges)
    if verdict.ok:
        print("ok")
        return EXIT_OK
    print(f"{verdict.failure}: witness {verdict.witness}", file=sys.stderr)
    return 1


def _parse_int_list(text: str) -> list[int]:
    items = [p for p in text.split(",") if p.strip()]
    return [int(p) for p in items]


def cmd_bench(args) -> int:
    try:
        sizes = _parse_int_list(args.sizes)
        seeds = _parse_int_list(args.seeds)
    except ValueError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not sizes or not seeds:
        print("bench: empty size or seed list", file=sys.stderr)
        return EXIT_USAGE
    if args.backend == "both":
        backends = ["c", "py"] if HAS_COMPILED else ["py"]
    else:
        backends = [resolve_backend(args.backend)]

    rows = []
    orders = gen.ORDERS
    for idx_n, n in enumerate(sizes):
        cap = n * (n - 1) // 2
        target = min(int(args.edge_factor * n), cap)
        for idx_s, seed in enumerate(seeds):
            order = orders[(idx_n + idx_s) % len(orders)]
            graph = gen.generate(gen.GenSpec(n, target, seed, order=order))
            payload = io.StringIO()
            stream_io.write_edge_stream(payload, graph.header, graph.edges)
            for backend in backends:
                src = io.StringIO(payload.getvalue())
                out = io.StringIO()
                reader = stream_io.open_edge_reader(src)
                writer = stream_io.open_triple_writer(out)
                t0 = time.perf_counter()
                stats = euler_core.run(reader, writer, mode=args.mode,
                                       backend=backend)
                wall = time.perf_counter() - t0
                out.seek(0)
                verdict = verify.verify_tour(stream_io.read_triples(out), n,
                                             graph.edges)
                if not verdict.ok:
                    print(f"bench: verification failed on n={n} seed={seed} "
                          f"backend={backend}: {verdict.failure}",
                          file=sys.stderr)
                    return 1
                m = graph.header.edge_count
                if stats.peak_e_int > n or stats.peak_f > n or stats.final_c > n // 3:
                    print(f"bench: memory bound violated on n={n} seed={seed}",
                          file=sys.stderr)
                    return 1
                rows.append({
                    "n": n,
                    "m": m,
                    "peak_e_int": stats.peak_e_int,
                    "peak_f": stats.peak_f,
                    "final_c": stats.final_c,
                    "words_peak": stats.words_peak,
                    "wall_time": round(wall, 6),
                    "words_per_node": round(stats.words_peak / n, 3),
                    "seed": seed,
                    "order": order,
                    "mode": args.mode,
                    "backend": backend,
                })
    with _open_out(args.report) as f:
        json.dump(rows, f, indent=2)
        f.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerstream",
        description="One-pass Euler tour engine over undirected edge streams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fault", choices=gen.FAULTS, default="none")
    p.add_argument("--order", choices=gen.ORDERS, default="shuffled")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="compute an Euler tour from an edge stream")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.add_argument("--mode", choices=euler_core.MODES, default="optimized")
    p.add_argument("--backend", choices=("auto", "py", "c"), default="auto")
    p.add_argument("--stats", default=None, help="write run stats JSON here")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="check a tour file against its graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--tour", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="gen+run+verify over a size/seed grid")
    p.add_argument("--sizes", required=True, help="comma-separated node counts")
    p.add_argument("--seeds", required=True, help="comma-separated seeds")
    p.add_argument("--mode", choices=euler_core.MODES, default="optimized")
    p.add_argument("--backend", choices=("auto", "py", "c", "both"),
                   default="both")
    p.add_argument("--edge-factor", type=float, default=3.0,
                   help="target edges per node")
    p.add_argument("--report", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
