"""Trusted in-memory verification of emitted tours.

Everything here may hold the whole graph: it is the oracle side of the
artifact, not the memory-bounded engine.  A successor map is a dict from
directed edge to directed edge where each image starts at the preimage's
head; a bijective single-orbit successor map is exactly an Euler tour.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import SwapPreconditionError
from .stream_io import canon

Edge = tuple[int, int]
SuccessorMap = dict[Edge, Edge]


def check_successor_map(f: SuccessorMap) -> None:
    """Every image must start where its preimage ends."""
    for e, s in f.items():
        if s[0] != e[1]:
            raise ValueError(f"successor of {e} is {s}, which does not start at {e[1]}")


def is_bijective(f: SuccessorMap) -> bool:
    return set(f.values()) == set(f)


def orbit_partition(f: SuccessorMap) -> list[tuple[Edge, ...]]:
    """Orbits of a bijective successor map, deterministically reported.

    Each orbit is walked from its lexicographically smallest edge; orbits
    are listed by those representatives.  Walking an orbit's full length
    must return to the start (checked), which is what makes orbits well
    defined in the first place.
    """
    check_successor_map(f)
    if not is_bijective(f):
        raise ValueError("successor map is not bijective on its edge set")
    seen: set[Edge] = set()
    blocks: list[tuple[Edge, ...]] = []
    for start in sorted(f):
        if start in seen:
            continue
        block = [start]
        e = f[start]
        while e != start:
            block.append(e)
            e = f[e]
        seen.update(block)
        e = start
        for _ in block:
            e = f[e]
        if e != start:
            raise AssertionError(f"orbit of {start} does not close after {len(block)} steps")
        blocks.append(tuple(block))
    return blocks


def swap_successors(f: SuccessorMap, pairs: list[tuple[Edge, Edge]]) -> SuccessorMap:
    """Exchange the successors of each pair, merging orbits.

    Hypotheses (checked, violations raise SwapPreconditionError): the first
    edges of all pairs lie in one common orbit and are pairwise distinct;
    the partner edges lie in pairwise distinct orbits, none of them the
    common one; each pair shares its head node, so the result is still a
    successor map.  Merging one orbit with several others through distinct
    partner orbits is exactly what keeps the swap from splitting tours
    apart again.
    """
    blocks = orbit_partition(f)
    block_of: dict[Edge, int] = {}
    for bi, block in enumerate(blocks):
        for e in block:
            block_of[e] = bi
    if not pairs:
        return dict(f)
    for e, ep in pairs:
        if e not in f or ep not in f:
            raise SwapPreconditionError(f"swap edge {e if e not in f else ep} not in map")
    base = block_of[pairs[0][0]]
    seen_primary: set[Edge] = set()
    seen_partner_blocks: set[int] = set()
    for e, ep in pairs:
        if e[1] != ep[1]:
            raise SwapPreconditionError(f"pair {e}, {ep} does not share a head node")
        if block_of[e] != base:
            raise SwapPreconditionError("all primary edges must lie in one orbit")
        if e in seen_primary:
            raise SwapPreconditionError(f"primary edge {e} used twice")
        seen_primary.add(e)
        if block_of[ep] == base:
            raise SwapPreconditionError(f"partner edge {ep} lies in the primary orbit")
        if block_of[ep] in seen_partner_blocks:
            raise SwapPreconditionError("two partner edges lie in one orbit")
        seen_partner_blocks.add(block_of[ep])
    g = dict(f)
    for e, ep in pairs:
        g[e] = f[ep]
        g[ep] = f[e]
    check_successor_map(g)
    if not is_bijective(g):
        raise AssertionError("swap result lost bijectivity")
    return g


@dataclass
class Verdict:
    ok: bool
    failure: str | None = None
    witness: tuple | None = None

    FAILURES = ("missing-edge", "duplicate-edge", "bad-successor-head",
                "not-bijective", "multiple-classes")


def verify_tour(triples: list[tuple[int, int, int]], n: int, edges) -> Verdict:
    """Check that a triple stream encodes an Euler tour of the given graph.

    ok iff every undirected edge appears exactly once among the triples'
    first two fields (in some orientation), every named successor is a real
    edge traversed in the orientation the stream gave it, the induced map is
    a bijection, and one orbit covers all m edges.  Failure names:

    * missing-edge: coverage broken — a graph edge never written, or a
      written edge that is not in the graph (the witness tells which).
    * duplicate-edge: an unordered edge written twice.
    * bad-successor-head: a named successor that is not a graph edge at all.
    * not-bijective: successor named against its streamed orientation, or
      two edges sharing a successor.
    * multiple-classes: bijective but more than one orbit.
    """
    edge_set = {canon(u, v) for u, v in edges}
    m = len(edge_set)
    counts: Counter = Counter()
    alien: tuple[int, int] | None = None
    for v1, v2, _ in triples:
        key = canon(v1, v2)
        counts[key] += 1
        if counts[key] > 1:
            return Verdict(False, "duplicate-edge", (v1, v2))
        if key not in edge_set and alien is None:
            alien = (v1, v2)
    for e in sorted(edge_set):
        if e not in counts:
            return Verdict(False, "missing-edge", e)
    if alien is not None:
        return Verdict(False, "missing-edge", alien)
    oriented = {(v1, v2) for v1, v2, _ in triples}
    succ_of: SuccessorMap = {}
    for v1, v2, s in triples:
        if canon(v2, s) not in edge_set:
            return Verdict(False, "bad-successor-head", (v2, s))
        succ_of[(v1, v2)] = (v2, s)
    seen_succ: set[Edge] = set()
    for e in sorted(succ_of):
        sedge = succ_of[e]
        if sedge not in oriented or sedge in seen_succ:
            return Verdict(False, "not-bijective", sedge)
        seen_succ.add(sedge)
    if m == 0:
        return Verdict(True)
    start = min(succ_of)
    count = 1
    e = succ_of[start]
    while e != start:
        count += 1
        e = succ_of[e]
    if count != m:
        return Verdict(False, "multiple-classes", start)
    return Verdict(True)


def eulerian_conditions(n: int, edges) -> bool:
    """All degrees even and all edges within one connected component.

    Isolated nodes do not count against connectivity; the empty graph
    qualifies vacuously.
    """
    degree = [0] * (n + 1)
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d % 2 for d in degree):
        return False
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return all(v in seen for v in adj)


def hierholzer_oracle(n: int, edges) -> list[Edge] | None:
    """Classical in-memory tour construction; None when no tour exists.

    Ground truth for existence only — tours are not unique, so the edge
    sequence is never compared against the engine's output.
    """
    edges = list(edges)
    if not eulerian_conditions(n, edges):
        return None
    if not edges:
        return []
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    used: set[tuple[int, int]] = set()
    cursor: dict[int, int] = {v: 0 for v in adj}
    start = edges[0][0]
    stack = [start]
    walk: list[int] = []
    while stack:
        x = stack[-1]
        nbrs = adj[x]
        i = cursor[x]
        while i < len(nbrs) and canon(x, nbrs[i]) in used:
            i += 1
        cursor[x] = i
        if i == len(nbrs):
            walk.append(x)
            stack.pop()
        else:
            y = nbrs[i]
            used.add(canon(x, y))
            stack.append(y)
    walk.reverse()
    if len(walk) != len(edges) + 1:
        return None
    return [(walk[i], walk[i + 1]) for i in range(len(walk) - 1)]


def check_label_partition(mapping: SuccessorMap, tour_label: list[int]) -> None:
    """Debug invariant: edges group by the tour label of their endpoints
    exactly as they group into orbits of the current successor view."""
    for u, v in mapping:
        if tour_label[u] != tour_label[v]:
            raise AssertionError(f"edge ({u}, {v}) spans labels "
                                 f"{tour_label[u]} and {tour_label[v]}")
    blocks = orbit_partition(mapping)
    labels_seen: set[int] = set()
    for block in blocks:
        labels = {tour_label[e[0]] for e in block}
        if len(labels) != 1:
            raise AssertionError(f"orbit of {block[0]} spans labels {sorted(labels)}")
        lbl = labels.pop()
        if lbl in labels_seen:
            raise AssertionError(f"two orbits share label {lbl}")
        labels_seen.add(lbl)
