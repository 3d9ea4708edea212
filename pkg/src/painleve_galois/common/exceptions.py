"""Exceptions raised across the package."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from painleve_galois.common.polynomial import Polynomial


class PainleveGaloisError(Exception):
    """Base class of every error raised by the package."""


class DomainError(PainleveGaloisError, ValueError):
    """An operation was called outside of its domain."""


class InexactDivisionError(DomainError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, quotient: Polynomial, remainder: Polynomial) -> None:
        """Store the truncated quotient and the remainder.

        Args:
            quotient (Polynomial): quotient of the euclidean division
            remainder (Polynomial): nonzero remainder of the euclidean division
        """
        super().__init__(f"Division is not exact, remainder {remainder}")
        self.quotient = quotient
        self.remainder = remainder


class NonInvertibleError(DomainError):
    """A quotient ring element shares a factor with the modulus."""

    def __init__(self, gcd: Polynomial) -> None:
        """Store the nontrivial common factor.

        Args:
            gcd (Polynomial): monic gcd of representative and modulus
        """
        super().__init__(f"Element is not invertible, common factor {gcd}")
        self.gcd = gcd


class NonRationalAntiderivativeError(DomainError):
    """The antiderivative of a rational function has a logarithmic part."""

    def __init__(self, factor: Polynomial) -> None:
        """Store the factor carrying nonzero residues.

        Args:
            factor (Polynomial): squarefree factor whose roots carry nonzero residues
        """
        super().__init__(f"Nonzero residues at the roots of {factor}")
        self.factor = factor


class ExpressionSyntaxError(DomainError):
    """Expression text could not be parsed."""

    def __init__(self, message: str, position: int) -> None:
        """Store the message and the 0-based position of the problem.

        Args:
            message (str): description of the problem
            position (int): 0-based column in the input text
        """
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InternalInconsistencyError(PainleveGaloisError, RuntimeError):
    """An identity that holds as a theorem failed to hold."""


class SchemaValidationError(PainleveGaloisError, ValueError):
    """A serialized record does not match its schema."""


class UsageError(PainleveGaloisError):
    """The command line could not be parsed."""
