"""Exception hierarchy shared across the package."""


class TPError(Exception):
    """Base class for every error raised by tptri."""


class NegativeCoefficient(TPError, ValueError):
    """A recurrence coefficient came out negative."""

    def __init__(self, name, index, value):
        self.name = name
        self.index = index
        self.value = value
        super().__init__(f"coefficient {name}_{index} = {value} is negative")


class NegativePolyCoefficient(NegativeCoefficient):
    """A polynomial recurrence coefficient has a negative coefficient in q."""

    def __init__(self, name, index, value):
        self.name = name
        self.index = index
        self.value = value
        TPError.__init__(
            self, f"coefficient {name}_{index}(q) = {value} has a negative coefficient"
        )


class ClosedFormMismatch(TPError, ArithmeticError):
    """A recurrence value disagrees with a registered closed form."""

    def __init__(self, n, k, recurrence_value, closed_value):
        self.n, self.k = n, k
        self.recurrence_value = recurrence_value
        self.closed_value = closed_value
        super().__init__(
            f"entry ({n}, {k}): recurrence gives {recurrence_value}, "
            f"closed form gives {closed_value}"
        )


class NotNonnegative(TPError, ValueError):
    """A tridiagonal matrix has a negative band entry."""


class NegativeTerm(TPError, ValueError):
    """A sequence that must be nonnegative has a negative term."""


class InsufficientLength(TPError, ValueError):
    """A sequence is too short for the requested matrix."""


class UnknownCriterion(TPError, KeyError):
    """The requested criterion id is not known."""


class IndexOutOfRange(TPError, IndexError):
    """A row or column index set does not fit the matrix."""


class SpecError(TPError, ValueError):
    """Malformed spec file, sequence expression, or unknown catalog name."""


class OrderCapExceeded(TPError, ValueError):
    """Requested truncation order exceeds the configured safety cap."""
