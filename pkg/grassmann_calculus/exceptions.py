from __future__ import annotations

import typing as t

__all__ = [
    "CalculusError",
    "PartitionError",
    "RingMismatchError",
    "DegreeError",
    "SetupError",
    "SupportError",
    "MissingMonomialError",
    "ConversionError",
    "MatchFailure",
    "ConfigError",
]


class CalculusError(ValueError):
    """Base exception for all errors raised by the calculus engine."""

    message: str

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class PartitionError(CalculusError):
    """Raised when a sequence is not a valid partition, or a partition operation cannot be
    performed on its input.
    """

    parts: t.Tuple[int, ...]

    def __init__(self, message: str, parts: t.Iterable[int]) -> None:
        super().__init__(message)
        self.parts = tuple(parts)


class RingMismatchError(CalculusError):
    """Raised when the operands of a ring operation live on different generator tables."""


class DegreeError(CalculusError):
    """Raised when an element does not have the degree an operation requires.

    Parameters
    ----------
    message:
        The exception message.
    expected: :class:`int`
        The degree that was required.
    actual: Optional[:class:`int`]
        The degree that was found, or ``None`` if the element is not homogeneous.
    """

    expected: int
    actual: t.Optional[int]

    def __init__(self, message: str, expected: int, actual: t.Optional[int]) -> None:
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class SetupError(CalculusError):
    """Raised when numeric parameters (ranks, dimensions, exponents) are out of range."""

    parameter: str
    value: t.Any

    def __init__(self, message: str, parameter: str, value: t.Any) -> None:
        super().__init__(message)
        self.parameter = parameter
        self.value = value


class SupportError(CalculusError):
    """Raised when a fibered class has terms outside the support an operation accepts."""


class MissingMonomialError(CalculusError):
    """Raised when an intersection table does not cover every monomial of an expression.

    Parameters
    ----------
    message:
        The exception message.
    keys: Collection[:class:`str`]
        The canonical keys of all monomials that were missing from the table.
    """

    keys: t.Tuple[str, ...]

    def __init__(self, message: str, keys: t.Iterable[str]) -> None:
        super().__init__(message)
        self.keys = tuple(keys)


class ConversionError(CalculusError):
    """Raised when a JSON document or command-line literal cannot be converted.

    Parameters
    ----------
    message:
        The exception message.
    name: :class:`str`
        The name of the field or parameter that failed to convert.
    errors: Collection[:class:`ValueError`]
        All the exceptions that occured during conversion.
    """

    name: str
    errors: t.Tuple[ValueError, ...]

    def __init__(self, message: str, name: str, errors: t.Iterable[ValueError] = ()) -> None:
        super().__init__(message)
        self.name = name
        self.errors = tuple(errors)


class MatchFailure(ConversionError):
    """Raised when a literal failed to match the pattern of its type."""

    regex: t.Pattern[str]

    def __init__(self, message: str, name: str, regex: t.Pattern[str]) -> None:
        super().__init__(message, name)
        self.regex = regex


class ConfigError(CalculusError):
    """Raised when a verification suite configuration is malformed."""

    key: t.Optional[str]

    def __init__(self, message: str, key: t.Optional[str] = None) -> None:
        super().__init__(message)
        self.key = key
