"""Exception types shared across the package."""


class EdgeStreamError(ValueError):
    """Bad input stream: malformed record, id out of range, self-loop, duplicate."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"{message} (line {line_no})"
        super().__init__(message)
        self.line_no = line_no


class AlgoError(Exception):
    """Base for algorithm-level rejections of non-Eulerian inputs."""


class OddDegreeError(AlgoError):
    def __init__(self):
        super().__init__("At least one node with odd degree")


class NotConnectedError(AlgoError):
    def __init__(self):
        super().__init__("Graph not connected")


class GenerationError(ValueError):
    """Generator spec cannot be satisfied (e.g. exceeds simple-graph capacity)."""


class SwapPreconditionError(ValueError):
    """Successor-swap hypotheses violated (e.g. two swap partners in one orbit)."""
