"""Exception types shared across the package."""


class StarBorelError(ValueError):
    """Base class for all errors raised by this package."""


class VariableMismatchError(StarBorelError):
    """Two operands live over incompatible variable sets."""


class UnknownVariableError(StarBorelError):
    """A variable name is not part of the operand's variable set."""


class WindowOverflowError(StarBorelError):
    """An operation would push exact terms past the truncation window."""


class BindingError(StarBorelError):
    """Illegal variable binding (e.g. binding the distinguished variable)."""


class ParseError(StarBorelError):
    """The input text does not conform to the series/polynomial grammar."""


class NotSimpleError(StarBorelError):
    """A polynomial required to be simple in its distinguished variable is not."""


class DegenerateError(StarBorelError):
    """Degrees too low for the requested construction (e.g. resultant of constants)."""


class OnVarietyError(StarBorelError):
    """A sample point lies on the variety for every value of the free variable."""


class AliasingError(StarBorelError):
    """Too few quadrature nodes for the Fourier content of the integrand."""
