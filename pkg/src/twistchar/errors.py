"""Exception types shared across the package."""


class EnumerationLimitError(ValueError):
    """An enumeration would exceed its configured size cap."""


class RingMismatchError(TypeError):
    """Two values or series live in incompatible coefficient rings."""


class InversionError(ArithmeticError):
    """A series or coefficient is not invertible."""


class IntegralityError(ArithmeticError):
    """A group average failed to cancel to an integer."""
