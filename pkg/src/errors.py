class SignRulesError(ValueError):
    """Base class for every error raised by the library."""


class PolynomialError(SignRulesError):
    """A precondition on a polynomial, interval or sequence does not hold."""


class IsolationDepthError(PolynomialError):
    """Bisection went deeper than the configured cap."""


class ParseError(SignRulesError):
    def __init__(self, message: str, position: int = 0):
        self.message = message
        self.position = position
        super().__init__(f"{message} at position {position}")
