"""Seeded generators of Eulerian and deliberately faulty edge streams.

Construction is by cycle superposition: a closed walk over a random
permutation of all nodes (even degrees, connected, touches every node),
then random simple cycles over node subsets are layered on top, whole
cycles rejected on any duplicate edge.  That keeps the result Eulerian by
construction and makes the cycle-interleaved stream ordering natural.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import GenerationError
from .stream_io import EdgeStreamHeader, canon

FAULTS = ("none", "odd-degree", "disconnected")
ORDERS = ("shuffled", "cycle-interleaved", "sorted")

# consecutive rejected cycle candidates before giving up on more edges
_MAX_REJECTS = 200


@dataclass(frozen=True)
class GenSpec:
    n: int
    target_m: int
    seed: int
    fault: str = "none"
    order: str = "shuffled"


@dataclass
class GeneratedGraph:
    header: EdgeStreamHeader
    edges: list[tuple[int, int]]
    # constituent cycles of the pre-fault construction, as node sequences
    cycles: list[list[int]] = field(default_factory=list)


def _build_cycles(nodes: list[int], target_m: int, rng: random.Random) -> list[list[int]]:
    k = len(nodes)
    perm = nodes[:]
    rng.shuffle(perm)
    cycles = [perm[:]]
    edge_set = {canon(perm[i], perm[(i + 1) % k]) for i in range(k)}
    count = k
    rejects = 0
    while count + 3 <= target_m and rejects < _MAX_REJECTS:
        size = rng.randint(3, min(k, target_m - count))
        cand = rng.sample(nodes, size)
        cand_edges = [canon(cand[i], cand[(i + 1) % size]) for i in range(size)]
        if any(e in edge_set for e in cand_edges):
            rejects += 1
            continue
        edge_set.update(cand_edges)
        cycles.append(cand)
        count += size
        rejects = 0
    return cycles


def _ordered_edges(cycles: list[list[int]], order: str, rng: random.Random) -> list[tuple[int, int]]:
    if order == "cycle-interleaved":
        out = []
        pos = 0
        while True:
            emitted = False
            for c in cycles:
                if pos < len(c):
                    out.append((c[pos], c[(pos + 1) % len(c)]))
                    emitted = True
            if not emitted:
                return out
            pos += 1
    flat = [(c[i], c[(i + 1) % len(c)]) for c in cycles for i in range(len(c))]
    if order == "shuffled":
        rng.shuffle(flat)
        return flat
    if order == "sorted":
        return sorted(canon(u, v) for u, v in flat)
    raise AssertionError(order)


def generate(spec: GenSpec) -> GeneratedGraph:
    """Produce a deterministic edge stream for the given spec.

    target_m is approximate: the result never exceeds it by construction
    but may fall short by up to two edges (cycles come in sizes >= 3) or
    when the graph gets too dense to extend.  With target_m > 0 the stream
    has at least n edges (the base walk covers every node).
    """
    if spec.fault not in FAULTS:
        raise GenerationError(f"unknown fault {spec.fault!r}")
    if spec.order not in ORDERS:
        raise GenerationError(f"unknown order {spec.order!r}")
    if spec.n < 1:
        raise GenerationError("need at least one node")
    if spec.target_m < 0:
        raise GenerationError("negative edge count")
    if spec.target_m > 0 and spec.n < 3:
        raise GenerationError("need at least 3 nodes for any cycle")
    if spec.target_m > spec.n * (spec.n - 1) // 2:
        raise GenerationError(
            f"target of {spec.target_m} edges exceeds simple-graph capacity "
            f"for {spec.n} nodes")
    if spec.fault == "odd-degree" and spec.target_m == 0:
        raise GenerationError("odd-degree fault needs at least one edge")
    if spec.fault == "disconnected" and spec.n < 6:
        raise GenerationError("disconnected fault needs at least 6 nodes")

    rng = random.Random(spec.seed)
    if spec.target_m == 0:
        return GeneratedGraph(EdgeStreamHeader(spec.n, 0), [])

    if spec.fault == "disconnected":
        n1 = max(3, spec.n // 2)
        part1 = list(range(1, n1 + 1))
        part2 = list(range(n1 + 1, spec.n + 1))
        m1 = min(n1 * (n1 - 1) // 2, max(n1, spec.target_m * n1 // spec.n))
        m2 = min(len(part2) * (len(part2) - 1) // 2,
                 max(len(part2), spec.target_m - m1))
        cycles = _build_cycles(part1, m1, rng) + _build_cycles(part2, m2, rng)
    else:
        cycles = _build_cycles(list(range(1, spec.n + 1)), spec.target_m, rng)

    edges = _ordered_edges(cycles, spec.order, rng)
    if spec.fault == "odd-degree":
        del edges[rng.randrange(len(edges))]
    return GeneratedGraph(EdgeStreamHeader(spec.n, len(edges)), edges, cycles)
