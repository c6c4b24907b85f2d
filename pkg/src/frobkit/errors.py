"""Exception hierarchy shared by the library and the CLI."""


class FrobkitError(Exception):
    """Base class for computation errors (CLI exit code 3)."""


class EmptyIdeal(FrobkitError, ValueError):
    pass


class NotZeroDimensional(FrobkitError, ValueError):
    pass


class NotContained(FrobkitError, ValueError):
    pass


class NotParameterIdeal(FrobkitError, ValueError):
    pass


class InsufficientData(FrobkitError, ValueError):
    pass


class HypothesisViolated(FrobkitError):
    pass


class NoGenericScalar(FrobkitError):
    pass


class InvalidStructure(FrobkitError, ValueError):
    """Structure constants or module action fail a validation check."""
