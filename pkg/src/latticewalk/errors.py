"""Exception hierarchy. The CLI maps these onto exit codes."""


class LatticeWalkError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(LatticeWalkError, ValueError):
    pass


class ZeroBinomialError(LatticeWalkError, ValueError):
    pass


class InhomogeneousError(LatticeWalkError, ValueError):
    """A vector that should lie in ker A does not."""


class ArithmeticOverflow(LatticeWalkError, OverflowError):
    """An intermediate integer left the signed 64-bit range."""


class TerminationError(LatticeWalkError):
    """Termination cannot be certified, or a guard was exceeded."""


class NotPositiveError(TerminationError):
    """The grading admits no positivity certificate."""


class ParseError(LatticeWalkError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class GeometryError(LatticeWalkError, ValueError):
    """A weight vector or facet does not satisfy a cone precondition."""
