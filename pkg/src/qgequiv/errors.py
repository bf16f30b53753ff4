"""Exception hierarchy shared by every module in the package."""


class QGEquivError(Exception):
    """Base class for all errors raised by qgequiv."""


class DomainError(QGEquivError, ValueError):
    """A parameter lies outside its admissible range."""


class DimensionMismatchError(QGEquivError, ValueError):
    pass


class DegenerateEventsError(QGEquivError, ValueError):
    """Two events coincide where a ratio of their differences is needed."""


class CausalityError(QGEquivError, ValueError):
    """The requested frame change would need a speed of at least c."""


class UnknownSymbolError(QGEquivError, KeyError):
    pass


class UnsupportedMeasureError(QGEquivError):
    """The measure is declared but has no computational procedure."""


class InvariantViolation(QGEquivError, ValueError):
    """A numerical object breaks its defining invariant beyond tolerance."""


class ConvergenceError(QGEquivError):
    pass


class ScenarioError(QGEquivError):
    """A scenario file failed validation.

    ``violations`` lists every problem found, not just the first one.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
