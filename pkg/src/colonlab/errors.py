"""Exception hierarchy shared by the engine, the classifiers and the CLI."""

from __future__ import annotations


class ColonLabError(Exception):
    """Base class for every error raised by colonlab."""


class ContextMismatch(ColonLabError, ValueError):
    """Two operands live in different polynomial rings."""


class ParseError(ColonLabError, ValueError):
    """Malformed polynomial or ideal expression."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class ResourceError(ColonLabError, RuntimeError):
    """A computation exceeded a configured resource cap."""


class GenericityError(ColonLabError, RuntimeError):
    """Sampled 'general' elements gave inconsistent answers."""

    def __init__(self, message: str = "genericity ambiguity - raise trials or characteristic"):
        super().__init__(message)


class NotMPrimary(ColonLabError, ValueError):
    """Certification refused: the ideal is not primary to the origin."""


class HypothesisNotMet(ColonLabError, ValueError):
    """The premise of a checked statement does not hold for the given input."""


class EngineInconsistency(ColonLabError, AssertionError):
    """Two routes that must agree did not. Always a bug."""


class OracleError(ColonLabError, ValueError):
    """The truncated linear-algebra oracle cannot decide the question."""
