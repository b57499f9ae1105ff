import io

import pytest

from eulerstream import euler_core, stream_io
from eulerstream.cycle_forest import HAS_COMPILED

BACKENDS = ["py"] + (["c"] if HAS_COMPILED else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def graph_text(n, edges, m=None):
    m = len(edges) if m is None else m
    return f"{n} {m}\n" + "".join(f"{u} {v}\n" for u, v in edges)


def drive_text(text, mode="optimized", backend=None, check_labels=False):
    """Run the engine over a graph file's text; return (output, stats, reader)."""
    reader = stream_io.open_edge_reader(io.StringIO(text))
    out = io.StringIO()
    writer = stream_io.open_triple_writer(out)
    stats = euler_core.run(reader, writer, mode=mode, backend=backend,
                           check_labels=check_labels)
    return out.getvalue(), stats, reader


def drive_edges(n, edges, **kw):
    return drive_text(graph_text(n, edges), **kw)
