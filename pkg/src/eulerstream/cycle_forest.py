"""Cycle-free internal edge buffer with on-insert cycle extraction.

The buffer holds the edges that are still waiting for a cycle.  Inserting an
edge whose endpoints already share a tree closes exactly one cycle: the
unique tree path between the endpoints plus the new edge.  That cycle is
returned in traversal order and its edges leave the buffer, so the buffer is
a forest again after every insertion.

Two interchangeable implementations exist: this pure-Python one and a
compiled twin in ``eulerstream._forest`` built from Cython (the per-edge
path search is the hot inner loop of a run).  The compiled one is preferred
at import when present; ``EULERSTREAM_BACKEND`` or an explicit ``backend``
argument overrides.
"""

from __future__ import annotations

import os


class InternalGraph:
    """Forest over nodes ``1..n`` storing the not-yet-cycled edges."""

    backend = "py"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("node count must be >= 1")
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.live_edge_count = 0
        self.peak_edge_count = 0

    def insert_edge(self, u: int, v: int) -> list[int] | None:
        """Add edge (u, v); if it closes a cycle, extract and return it.

        The returned record starts at ``v`` and follows the former tree path
        to ``u``, so the inserted edge is traversed ``u -> v`` as the closing
        edge.  All path edges are removed; the peak counter reflects the
        momentary presence of the inserted edge.
        """
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise ValueError("node id out of range")
        if u == v:
            raise ValueError("self-loop unsupported")
        if self.live_edge_count + 1 > self.peak_edge_count:
            self.peak_edge_count = self.live_edge_count + 1
        path = self._tree_path(v, u)
        if path is None:
            self.adj[u].append(v)
            self.adj[v].append(u)
            self.live_edge_count += 1
            return None
        if len(path) == 2:
            raise ValueError("edge already present")
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            self.adj[a].remove(b)
            self.adj[b].remove(a)
        self.live_edge_count -= len(path) - 1
        return path

    def _tree_path(self, src: int, dst: int) -> list[int] | None:
        """Unique tree path [src..dst], or None when the trees differ.

        Two depth-first searches grow alternately from both endpoints; the
        search stops as soon as either side exhausts its tree, which bounds
        the miss cost by the smaller component.
        """
        adj = self.adj
        if not adj[src] or not adj[dst]:
            return None
        par_a = {src: 0}
        par_b = {dst: 0}
        stack_a = [src]
        stack_b = [dst]
        while stack_a and stack_b:
            x = stack_a.pop()
            for y in adj[x]:
                if y not in par_a:
                    par_a[y] = x
                    if y == dst:
                        chain = [dst]
                        while chain[-1] != src:
                            chain.append(par_a[chain[-1]])
                        chain.reverse()
                        return chain
                    stack_a.append(y)
            x = stack_b.pop()
            for y in adj[x]:
                if y not in par_b:
                    par_b[y] = x
                    if y == src:
                        chain = [src]
                        while chain[-1] != dst:
                            chain.append(par_b[chain[-1]])
                        return chain
                    stack_b.append(y)
        return None

    def contains_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def remaining_edges(self) -> set[tuple[int, int]]:
        """Current edge set as canonical (min, max) pairs."""
        out = set()
        for x in range(1, self.n + 1):
            for y in self.adj[x]:
                if x < y:
                    out.add((x, y))
        return out


try:
    from ._forest import InternalGraph as _CompiledInternalGraph
except ImportError:
    _CompiledInternalGraph = None

HAS_COMPILED = _CompiledInternalGraph is not None


def resolve_backend(name: str | None = None) -> str:
    """Resolve 'auto'/'py'/'c' (default from $EULERSTREAM_BACKEND) to 'py'|'c'."""
    name = name or os.environ.get("EULERSTREAM_BACKEND", "auto")
    if name == "auto":
        return "c" if HAS_COMPILED else "py"
    if name not in ("py", "c"):
        raise ValueError(f"unknown backend {name!r} (expected auto, py, or c)")
    if name == "c" and not HAS_COMPILED:
        raise ValueError("compiled forest backend is not available in this install")
    return name


def make_internal_graph(n: int, backend: str | None = None):
    if resolve_backend(backend) == "c":
        return _CompiledInternalGraph(n)
    return InternalGraph(n)
