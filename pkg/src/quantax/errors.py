class QuantaxError(Exception):
    """Base class for all errors raised by this package."""


class AxiomsNotSatisfied(QuantaxError):
    """A required axiom precondition does not hold for the given system."""

    def __init__(self, message, reports=()):
        super().__init__(message)
        self.reports = tuple(reports)
