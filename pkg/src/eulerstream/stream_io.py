"""Edge-stream input and successor-triple output.

Text formats:

* graph file: first line ``n m``, then one edge ``u v`` per line.  Node ids
  are 1-based integers in ``[1, n]``; ``m`` is advisory (0 = unknown), the
  true edge count is whatever the stream yields.
* tour file: one triple ``v1 v2 s`` per line, meaning the edge leaving
  ``v2`` towards ``s`` follows the edge ``(v1, v2)`` in the tour.

Readers are strictly sequential and can be consumed exactly once; writers
are append-only.  All other modules consume these abstractions, never raw
bytes.
"""

from __future__ import annotations

from typing import IO, Iterator, NamedTuple

from .errors import EdgeStreamError


class EdgeStreamHeader(NamedTuple):
    node_count: int
    edge_count: int


def canon(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge, for set membership."""
    return (u, v) if u < v else (v, u)


def _parse_ints(line: str, want: int, line_no: int) -> list[int]:
    parts = line.split()
    if len(parts) != want:
        raise EdgeStreamError(
            f"malformed record: expected {want} fields, got {len(parts)}", line_no
        )
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise EdgeStreamError(f"malformed record: non-integer field in {line!r}", line_no) from None


class EdgeReader:
    """Single-consumption reader over a graph text stream.

    Validates ids against the header, rejects self-loops and repeated
    unordered pairs.  ``consumed`` counts edges handed out so far.
    """

    def __init__(self, source: IO[str]):
        self._source = source
        self._started = False
        self.consumed = 0
        first = source.readline()
        if first == "":
            raise EdgeStreamError("empty stream: missing header", 1)
        n, m = _parse_ints(first, 2, 1)
        if n < 1:
            raise EdgeStreamError(f"node count must be >= 1, got {n}", 1)
        if m < 0:
            raise EdgeStreamError(f"edge count must be >= 0, got {m}", 1)
        self.header = EdgeStreamHeader(n, m)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        if self._started:
            raise RuntimeError("edge stream already consumed; readers are one-shot")
        self._started = True
        return self._edges()

    def _edges(self) -> Iterator[tuple[int, int]]:
        n = self.header.node_count
        seen: set[tuple[int, int]] = set()
        line_no = 1
        for line in self._source:
            line_no += 1
            u, v = _parse_ints(line, 2, line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise EdgeStreamError(f"node id out of [1, {n}]: edge ({u}, {v})", line_no)
            if u == v:
                raise EdgeStreamError("self-loop unsupported", line_no)
            key = canon(u, v)
            if key in seen:
                raise EdgeStreamError("multigraph unsupported", line_no)
            seen.add(key)
            self.consumed += 1
            yield (u, v)


def open_edge_reader(source: IO[str]) -> EdgeReader:
    """Open a sequential edge reader over ``source`` (header line first)."""
    return EdgeReader(source)


class TripleWriter:
    """Append-only writer of successor triples; records are never rewritten."""

    def __init__(self, sink: IO[str]):
        self._sink = sink
        self._closed = False
        self.count = 0
        self.bytes_written = 0

    def emit(self, v1: int, v2: int, s: int) -> None:
        if self._closed:
            raise RuntimeError("triple writer is closed")
        record = f"{v1} {v2} {s}\n"
        try:
            self._sink.write(record)
        except OSError as exc:
            raise OSError(f"write failed at byte offset {self.bytes_written}: {exc}") from exc
        self.bytes_written += len(record)
        self.count += 1

    def close(self) -> None:
        self._closed = True


def open_triple_writer(sink: IO[str]) -> TripleWriter:
    return TripleWriter(sink)


def read_triples(source: IO[str]) -> list[tuple[int, int, int]]:
    """Parse a tour file back into a list of (v1, v2, s) triples."""
    triples = []
    for line_no, line in enumerate(source, start=1):
        v1, v2, s = _parse_ints(line, 3, line_no)
        triples.append((v1, v2, s))
    return triples


def write_edge_stream(sink: IO[str], header: EdgeStreamHeader, edges) -> None:
    """Write a graph file in the input format (used by the generator)."""
    sink.write(f"{header.node_count} {header.edge_count}\n")
    for u, v in edges:
        sink.write(f"{u} {v}\n")
