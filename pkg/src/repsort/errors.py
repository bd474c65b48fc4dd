"""Exception types shared across the package."""


class RepsortError(Exception):
    """Base class for all repsort errors."""


class EmptyWordError(RepsortError):
    """An operation received an empty word; every word must have length >= 1."""


class NotPrimitiveError(RepsortError):
    """A word required to be primitive is a proper power."""


class NotDistinctError(RepsortError):
    """A word list required to be duplicate-free contains a repeated word."""


class EmptyInputError(RepsortError):
    """An operation requiring at least one word received an empty list."""


class TooLargeError(RepsortError):
    """A brute-force oracle was asked for an input beyond its factorial guard."""


class BadParameterError(RepsortError):
    """A generator parameter is out of range."""


class InvariantViolationError(RepsortError):
    """A runtime self-check failed; indicates a bug, never bad user input."""
