"""Exception types shared across the package."""


class PolynomialError(ValueError):
    """Base class for invalid polynomial input."""


class ZeroPolynomialError(PolynomialError):
    """Raised when an operation needs a nonzero polynomial."""


class DegreeError(PolynomialError):
    """Raised when a polynomial's degree is outside an operation's range."""


class NotRegularizedError(PolynomialError):
    """A zero coefficient or zero quadratic element is present.

    Shift the polynomial with :func:`newtonrule.poly.regularize` first.
    """


class ParseError(ValueError):
    """Raised by the expression parser; carries the offending position."""

    def __init__(self, message, position, text=""):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position
        self.text = text

    @property
    def diagnostic(self):
        from .parser import ParseDiagnostic

        return ParseDiagnostic(self.position, self.message, "error")
