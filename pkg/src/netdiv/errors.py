"""Exception types raised by graph construction and validation."""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class ParallelEdgeError(GraphError):
    """Two edges share the same unordered vertex pair."""


class NegativeWeightError(GraphError):
    """An edge weight is negative or not finite."""


class VertexRangeError(GraphError):
    """An edge endpoint is outside [0, n)."""


class CoincidentPointsError(GraphError):
    """Two vertices share the same coordinates."""


class DisconnectedGraphError(GraphError):
    """The graph is not connected where connectivity is required."""


class EulerCheckError(GraphError):
    """Face traversal contradicts V - E + F = 2: the rotation system does
    not describe a plane embedding."""


class EmbeddingError(GraphError):
    """The straight-line drawing has crossing or overlapping edges."""


class DegenerateInputError(GraphError):
    """Point set too degenerate to triangulate."""


class ValidationError(RuntimeError):
    """A computed solution failed its own post-checks.  Indicates an
    internal bug, never bad user input."""
