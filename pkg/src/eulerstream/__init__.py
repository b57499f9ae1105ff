"""One-pass Euler tour engine for undirected edge streams.

Reads a graph as a stream of edges, keeps O(n) words of working state, and
writes the tour as a stream of successor triples (v1, v2, s): the edge
leaving v2 towards s follows the edge (v1, v2).
"""

from .euler_core import RunStats, run
from .gen import GenSpec, generate
from .verify import hierholzer_oracle, verify_tour

__version__ = "0.1.0"

__all__ = [
    "GenSpec",
    "RunStats",
    "generate",
    "hierholzer_oracle",
    "run",
    "verify_tour",
    "__version__",
]
