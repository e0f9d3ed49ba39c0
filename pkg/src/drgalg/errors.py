"""Exception types shared across the package."""


class DrgalgError(Exception):
    """Base class for all errors raised by this package."""


class DisconnectedGraph(DrgalgError):
    """An operation that needs a connected graph got a disconnected one."""


class BadVertexList(DrgalgError):
    """Vertex list contains duplicates or out-of-range ids."""


class BadParameter(DrgalgError):
    """Invalid parameter for a graph family (e.g. crown size below 3)."""


class NonIntegralLayer(DrgalgError):
    """Layer-size recurrence produced a non-integer value."""


class InconsistentTensor(DrgalgError):
    """Intersection tensor violates a structural identity."""


class NonIntegralEntry(DrgalgError):
    """A closed-form intersection number is not an integer."""


class NegativeEntry(DrgalgError):
    """A closed-form intersection number is negative."""


class ColorCountMismatch(DrgalgError):
    """Coloring has the wrong number of diversity colors for the check."""


class ParseError(DrgalgError):
    """Malformed input text (edge list, coloring file, or array string)."""


class SizeGuard(DrgalgError):
    """Input exceeds the size limit for automorphism search; use force."""
