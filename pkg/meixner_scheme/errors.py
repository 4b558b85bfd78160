"""Exceptions raised by the meixner_scheme package.

Everything derives from MeixnerError so the CLI can catch one type and map it
to an exit code.
"""


class MeixnerError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(MeixnerError, TypeError):
    """Two quadratic numbers live in different fields Q(sqrt d)."""


class SeriesDomainError(MeixnerError, ValueError):
    pass


class InsufficientOrderError(MeixnerError, ValueError):
    pass


class DegenerateRecurrenceError(MeixnerError, ValueError):
    pass


class ParameterError(MeixnerError, ValueError):
    pass


class WeightDomainError(MeixnerError, ValueError):
    pass


class GammaPoleError(MeixnerError, ValueError):
    pass


class PositivityError(MeixnerError):
    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class TruncationError(MeixnerError):
    def __init__(self, message, required_terms=None):
        super().__init__(message)
        self.required_terms = required_terms
