"""One-pass Euler tour engine over an undirected edge stream.

The run consumes the stream exactly once.  Edges accumulate in a cycle-free
internal buffer; every time a cycle closes it is merged into the tours seen
so far and its edges leave memory, most of them written out immediately with
their final successors.  Working state is O(n) words: two int arrays per
node (tour label, reserved successor head), one stored in-going edge per
node, the internal forest, and a tour counter.

A node's *tour label* identifies the tour it currently belongs to (0 =
never visited).  Its *reserved successor head* ``w`` means the edge
``(v, w)`` is kept available to become the successor of the next tour that
merges at ``v``.  The *first in-going edge* of a node is withheld from the
output until the stream ends, because its successor may keep changing.

Two modes produce byte-identical output: ``faithful`` performs the literal
full-array sweeps per cycle (the auditable reference), ``optimized`` scans
only cycle nodes and relabels through label buckets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycle_forest import make_internal_graph
from .errors import NotConnectedError, OddDegreeError
from . import verify as _verify

MODES = ("faithful", "optimized")

# marks for the in-going edge of each cycle position, within one merge
_UNMARKED, _STORED, _MERGED = 0, 1, 2


@dataclass
class RunStats:
    peak_e_int: int = 0
    peak_f: int = 0
    final_c: int = 0
    cycles_found: int = 0
    triples_emitted: int = 0
    words_peak: int = 0
    passes: int = 1
    # observability beyond the stable JSON schema
    max_label: int = 0
    mode: str = "optimized"
    backend: str = "py"

    def to_json(self) -> dict:
        """The stable stats schema."""
        return {
            "peak_e_int": self.peak_e_int,
            "peak_f": self.peak_f,
            "final_c": self.final_c,
            "cycles_found": self.cycles_found,
            "triples_emitted": self.triples_emitted,
            "words_peak": self.words_peak,
            "passes": self.passes,
        }


class AlgoState:
    """The algorithm's entire RAM for one run."""

    def __init__(self, n: int, mode: str = "optimized", backend: str | None = None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.n = n
        self.mode = mode
        self.tour_label = [0] * (n + 1)
        self.reserved_succ = [0] * (n + 1)
        self.first_in = [0] * (n + 1)
        self.first_in_size = 0
        self.first_in_peak = 0
        self.internal = make_internal_graph(n, backend)
        self.c = 0
        self.max_label = 0
        self.cycles_found = 0
        # label -> nodes carrying it; redundant index used by optimized mode only
        self._buckets: dict[int, list[int]] = {}
        self._marks: list[int] = []
        # fixed floor: tour_label + reserved_succ arrays and the counter
        self.words_peak = 2 * n + 1

    def note_words(self, internal_edges: int) -> None:
        """Record the working-set size in words: internal edges and stored
        first-in edges cost two words each, plus the per-node arrays and c."""
        words = 2 * internal_edges + 2 * self.first_in_size + 2 * self.n + 1
        if words > self.words_peak:
            self.words_peak = words


def new_nodes(state: AlgoState, cycle: list[int]) -> None:
    """First-visit handling: store the in-going edge of every cycle node not
    seen before and reserve its out-going edge as the pending successor."""
    k = len(cycle)
    state._marks = [_UNMARKED] * k
    tour = state.tour_label
    for i in range(k):
        v = cycle[i]
        if tour[v] == 0:
            state.reserved_succ[v] = cycle[(i + 1) % k]
            if state.first_in[v] != 0:
                raise AssertionError(f"second first-in edge for node {v}")
            state.first_in[v] = cycle[i - 1]
            state.first_in_size += 1
            if state.first_in_size > state.first_in_peak:
                state.first_in_peak = state.first_in_size
            state._marks[i] = _STORED


def select_merge_nodes(state: AlgoState, cycle: list[int]) -> tuple[list[int], set[int]]:
    """Pick exactly one cycle position per distinct prior tour label.

    Ties break to the first occurrence in cycle order; the returned
    positions are ascending.  The labels set identifies every tour that the
    current cycle touches.
    """
    tour = state.tour_label
    chosen: list[int] = []
    labels: set[int] = set()
    if state.mode == "faithful":
        first_pos: dict[int, int] = {}
        for i, v in enumerate(cycle):
            lbl = tour[v]
            if lbl != 0 and lbl not in first_pos:
                first_pos[lbl] = i
        for lbl in range(1, state.n + 1):
            if lbl in first_pos:
                chosen.append(first_pos[lbl])
                labels.add(lbl)
        chosen.sort()
    else:
        for i, v in enumerate(cycle):
            lbl = tour[v]
            if lbl != 0 and lbl not in labels:
                labels.add(lbl)
                chosen.append(i)
    return chosen, labels


def merge(state: AlgoState, cycle: list[int], chosen: list[int], writer) -> None:
    """Successor swap at each chosen node: the in-going cycle edge takes the
    node's reserved successor, and the out-going cycle edge replaces it."""
    k = len(cycle)
    for i in chosen:
        v = cycle[i]
        head = state.reserved_succ[v]
        if head == 0:
            raise AssertionError(f"chosen node {v} has no reserved successor")
        writer.emit(cycle[i - 1], v, head)
        state.reserved_succ[v] = cycle[(i + 1) % k]
        state._marks[i] = _MERGED


def write_remaining(state: AlgoState, cycle: list[int], writer) -> None:
    """Emit every cycle edge not stored and not merged in this round, with
    the next cycle edge as its successor."""
    k = len(cycle)
    marks = state._marks
    for i in range(k):
        h = (i + 1) % k
        if marks[h] == _UNMARKED:
            writer.emit(cycle[i], cycle[h], cycle[(i + 2) % k])


def update_labels(state: AlgoState, cycle: list[int], labels: set[int]) -> None:
    """Collapse all touched tours and the cycle onto one label.

    A fresh label (next counter value) when no prior tour was touched,
    otherwise the smallest touched label.
    """
    if not labels:
        state.c += 1
        a = state.c
    else:
        a = min(labels)
    tour = state.tour_label
    if state.mode == "faithful":
        for v in range(1, state.n + 1):
            if tour[v] in labels:
                tour[v] = a
        for v in cycle:
            tour[v] = a
    else:
        dest = state._buckets.setdefault(a, [])
        for lbl in labels:
            if lbl == a:
                continue
            moved = state._buckets.pop(lbl)
            for v in moved:
                tour[v] = a
            dest.extend(moved)
        for v in cycle:
            if tour[v] == 0:
                dest.append(v)
            tour[v] = a
    if a > state.max_label:
        state.max_label = a


def merge_cycle(state: AlgoState, cycle: list[int], writer) -> None:
    """Merge one extracted cycle: first-visit bookkeeping, node selection,
    successor swaps, pass-through writes, then label collapse."""
    if len(cycle) < 3:
        raise AssertionError(f"cycle record too short: {cycle!r}")
    state.cycles_found += 1
    new_nodes(state, cycle)
    chosen, labels = select_merge_nodes(state, cycle)
    merge(state, cycle, chosen, writer)
    write_remaining(state, cycle, writer)
    update_labels(state, cycle, labels)
    if __debug__:
        k = len(cycle)
        for i in range(k):
            if state.internal.contains_edge(cycle[i], cycle[(i + 1) % k]):
                raise AssertionError("cycle edge still present after extraction")


def flush_first_in(state: AlgoState, writer) -> None:
    """Emit every stored first in-going edge with its final reserved
    successor, in ascending order of the head node."""
    for v in range(1, state.n + 1):
        u = state.first_in[v]
        if u:
            head = state.reserved_succ[v]
            if head == 0:
                raise AssertionError(f"stored in-going edge of {v} has no successor")
            writer.emit(u, v, head)


class _CapturingWriter:
    """Delegating writer that also retains emitted triples (debug checks)."""

    def __init__(self, inner):
        self._inner = inner
        self.records: list[tuple[int, int, int]] = []

    def emit(self, v1, v2, s):
        self._inner.emit(v1, v2, s)
        self.records.append((v1, v2, s))

    @property
    def count(self):
        return self._inner.count


def _assert_label_partition(state: AlgoState, capture: _CapturingWriter) -> None:
    """Processed edges must group by tour label exactly as they group under
    the successor view built from emitted triples and stored in-going edges."""
    mapping = {(v1, v2): (v2, s) for v1, v2, s in capture.records}
    for v in range(1, state.n + 1):
        u = state.first_in[v]
        if u:
            mapping[(u, v)] = (v, state.reserved_succ[v])
    _verify.check_label_partition(mapping, state.tour_label)


def run(reader, writer, mode: str = "optimized", backend: str | None = None,
        check_labels: bool = False) -> RunStats:
    """Consume the edge stream once and emit an Euler tour as successor
    triples.

    Raises OddDegreeError / NotConnectedError for non-Eulerian input (in
    that order, after the stream is exhausted); triples already emitted stay
    on the output, as the output stream is append-only.  ``check_labels``
    re-derives the tour partition from the emitted triples after every merge
    and compares it with the label array (test scale only).
    """
    n = reader.header.node_count
    state = AlgoState(n, mode=mode, backend=backend)
    out = _CapturingWriter(writer) if check_labels else writer
    emitted_before = out.count
    for u, v in reader:
        live_before = state.internal.live_edge_count
        cycle = state.internal.insert_edge(u, v)
        state.note_words(live_before + 1)
        if cycle is not None:
            merge_cycle(state, cycle, out)
            state.note_words(state.internal.live_edge_count)
            if check_labels:
                _assert_label_partition(state, out)
    if state.internal.live_edge_count > 0:
        raise OddDegreeError()
    seen_labels = {lbl for lbl in state.tour_label[1:] if lbl != 0}
    if len(seen_labels) > 1:
        raise NotConnectedError()
    flush_first_in(state, out)
    return RunStats(
        peak_e_int=state.internal.peak_edge_count,
        peak_f=state.first_in_peak,
        final_c=state.c,
        cycles_found=state.cycles_found,
        triples_emitted=out.count - emitted_before,
        words_peak=state.words_peak,
        passes=1,
        max_label=state.max_label,
        mode=mode,
        backend=state.internal.backend,
    )
