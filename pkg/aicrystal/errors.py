"""Exception hierarchy shared by every sub-package."""

from __future__ import annotations


class AICrystalError(Exception):
    """Base class for all errors raised by aicrystal."""


class RankError(AICrystalError, ValueError):
    """Raised when n is too small for the so_n rank m to be defined."""


class CrystalIndexError(AICrystalError, ValueError):
    """Raised when a crystal index i falls outside [1, n-1]."""


class LetterError(AICrystalError, ValueError):
    """Raised when a letter falls outside the alphabet [1, n]."""


class NotSemistandardError(AICrystalError, ValueError):
    """Raised when an operation needs a semistandard tableau and gets another."""


class CornerError(AICrystalError, ValueError):
    """Raised when a cell is not a removable corner of the shape."""


class ColumnError(AICrystalError, ValueError):
    """Raised when a sequence is not a strictly increasing column over [1, n]."""


class ShapeError(AICrystalError, ValueError):
    """Raised when a shape has more than m rows where at most m are allowed."""


class InvalidOscillatingTableauError(AICrystalError, ValueError):
    """Raised when a shape/sign walk is not an so_n-oscillating tableau."""


class InvalidQSymbolError(AICrystalError, ValueError):
    """Raised when a (Q1, Q2) pair does not encode an oscillating tableau."""


class NoPreimageError(AICrystalError, ValueError):
    """Raised when a (P, oscillating tableau) pair has no RS^AI preimage."""


class NonIntegralCharacterError(AICrystalError, ValueError):
    """Raised when an integral view is requested of a character with fractional terms."""


class StandardizationError(AICrystalError):
    """Raised when K1 iteration fails to reach an AI-tableau within its bound."""


class InsertionSchemeError(AICrystalError):
    """Raised when consecutive P^AI shapes are neither equal nor adjacent."""
