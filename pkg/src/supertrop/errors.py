"""Exception hierarchy shared by all modules."""


class SupertropError(Exception):
    """Base class for all library errors."""


class ParseError(SupertropError, ValueError):
    """Malformed scalar, vector, or matrix text."""


class DomainError(SupertropError, ValueError):
    """Operation applied outside its mathematical domain (e.g. inverting zero,
    pseudo-inverting a singular matrix)."""


class ShapeError(SupertropError, ValueError):
    """Dimension or shape mismatch between operands."""


class CapacityError(SupertropError, ValueError):
    """Input exceeds a documented size cap for an exhaustive algorithm."""


class PreconditionError(SupertropError, ValueError):
    """A stated mathematical precondition was violated."""
