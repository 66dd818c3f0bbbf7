"""Exception hierarchy shared by every module."""


class OrePairError(Exception):
    """Base class for library errors."""


class FieldMismatchError(OrePairError, ValueError):
    """Operands live in incompatible coefficient fields or linearity bases."""


class PreconditionError(OrePairError, ValueError):
    """A mathematical precondition of an operation is violated."""


class InvariantError(OrePairError, RuntimeError):
    """An internal invariant failed; indicates a bug or an exceeded safety cap."""
