"""Exception types shared across the package."""


class InvalidSubsetError(ValueError):
    """A vertex set names labels outside the ambient graph."""


class LabelError(IndexError):
    """A vertex label is out of range."""


class GraphFormatError(ValueError):
    """Malformed graph6 string or edge list."""


class PolynomialFormatError(ValueError):
    """Unparseable polynomial text or JSON."""


class UndefinedDegreeError(ValueError):
    """Degree requested for the zero polynomial."""


class MalformedPolynomialError(ValueError):
    """A polynomial that cannot be the subgraph component polynomial of any graph."""


class PreconditionError(ValueError):
    """Caller-asserted structure (e.g. regular bipartite) does not hold."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or memory bound would be exceeded."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same invariant disagree.

    Always a bug, never a property of the input.
    """


class ParameterError(ValueError):
    """Family parameters out of range."""
