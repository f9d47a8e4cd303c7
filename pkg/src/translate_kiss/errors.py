"""Exception hierarchy shared by all modules."""


class ParameterError(ValueError):
    """An argument is outside the range an operation is defined for."""


class RangeError(ParameterError):
    """An index exceeds a precomputed table's limit."""


class ContractViolation(ValueError):
    """An operation was called on inputs that break its precondition."""


class ConstructionBroken(RuntimeError):
    """A structural witness that must exist could not be found."""


class MalformedDocument(ValueError):
    """Input bytes are not valid JSON or lack required fields."""


class SchemaVersionMismatch(MalformedDocument):
    """Document declares a schema version this code does not speak."""


class DocumentInvariantError(MalformedDocument):
    """Document parsed but its contents violate a type invariant."""
