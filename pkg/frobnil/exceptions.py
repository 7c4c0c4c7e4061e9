"""Typed errors raised by the library, the CLI and the HTTP layer."""

from typing import Optional


class FrobnilError(Exception):
    """Base class for every error raised by frobnil."""


# Linear algebra and Frobenius data

class SingularMatrix(FrobnilError):
    """A square matrix has no inverse over the rationals."""


class GramSingular(SingularMatrix):
    """The trace form tr(b_i b_j) is degenerate, so no dual basis exists."""


class NotAssociative(FrobnilError):
    """The structure constants violate associativity."""


class NotUnital(FrobnilError):
    """The declared unit is not a two-sided identity."""


class NotSymmetric(FrobnilError):
    """An operation needs a symmetric Frobenius superalgebra."""


class NotAutomorphism(FrobnilError):
    """The solved Nakayama map is not multiplicative."""


class NotGraded(FrobnilError):
    """A Z-degree was requested from an algebra without a grading."""


class OddTraceParity(FrobnilError):
    """The closed divided-difference formula needs an even trace."""


class NonDivisible(FrobnilError):
    """A polynomial numerator was not divisible by x_{i+1} - x_i."""


# Shapes

class LengthMismatch(FrobnilError):
    """Tensor words of different lengths were combined."""


class SizeMismatch(FrobnilError):
    """Objects on different numbers of strands were combined."""


class AlgebraMismatch(FrobnilError):
    """Elements over different Frobenius superalgebras were combined."""


class SizeTooLarge(FrobnilError):
    """An exhaustive enumeration was requested beyond its guard."""


class IndexOutOfRange(FrobnilError):
    """A strand or generator index is outside 1..n (or 1..n-1)."""


# Text input

class ParseError(FrobnilError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class ExprSyntaxError(ParseError):
    """The expression does not follow the grammar."""


class UnknownSymbol(ParseError):
    """A generator symbol or basis label is not declared."""


class StrandOutOfRange(ParseError):
    """A strand index in the source text is outside 1..n."""


class IllegalSymbolForTarget(FrobnilError):
    """A generator is not available in the chosen target algebra."""


class ConfigError(FrobnilError):
    """An algebra config file could not be read or parsed."""


class ValidationFailed(FrobnilError):
    """Config data describes an algebra that fails the Frobenius axioms."""

    def __init__(self, message: str, report: Optional[object] = None):
        self.report = report
        super().__init__(message)


class UnknownAlgebra(FrobnilError):
    """No built-in or configured algebra has the requested name."""
