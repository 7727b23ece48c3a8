"""Exception types shared across the library."""


class InvalidFieldError(ValueError):
    """Field parameters are not an odd prime power within the supported range."""


class NotPIntegralError(ValueError):
    """A rational argument has denominator divisible by p."""


class PrecisionExhaustedError(ArithmeticError):
    """A result cannot be pinned down at the requested p-adic precision."""


class UnsupportedConfigurationError(ValueError):
    """Parameters violate a hypothesis of the identity being checked."""


class ResourceBudgetError(RuntimeError):
    """A precomputation would exceed the documented memory budget."""
