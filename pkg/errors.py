"""
Exception hierarchy shared by every locator module.
"""


class LocatorError(Exception):
    """Root of all errors raised deliberately by the locator."""


class InvalidInputError(LocatorError, ValueError):
    """An argument violates an operation's precondition or a type invariant."""


class DimensionMismatchError(InvalidInputError):
    """Two fingerprints (or a fingerprint and a map) use incompatible rosters."""


class ParseError(LocatorError):
    """A text document could not be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


class ProtocolError(LocatorError):
    """A wire line does not follow the request/response grammar."""


class TransportError(LocatorError):
    """The location server could not be reached or closed the connection."""


class ServiceError(LocatorError):
    """The location server answered with an ERR line."""

    def __init__(self, code: int, reason: str):
        super().__init__(f"server error {code} {reason}")
        self.code = code
        self.reason = reason
