"""Exception types shared across the package."""
from __future__ import annotations


class ReticError(Exception):
    """Base class for all errors raised by retic."""


class SignatureError(ReticError):
    """Unknown operation symbol, arity mismatch, or incompatible signatures."""


class CompatibilityError(ReticError):
    """A partition fails to be compatible with an operation.

    ``op`` and ``args`` name the first violating operation and argument pair.
    """

    def __init__(self, message: str, op: str | None = None, args=None):
        super().__init__(message)
        self.op = op
        self.args_witness = args


class HypothesisError(ReticError):
    """A required law flag or structural hypothesis does not hold."""


class LatticeTooLarge(ReticError):
    """Ideal enumeration was asked for a lattice above the configured cap."""


class ParseError(ReticError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, col {col}: {message}" if line else message)
        self.line = line
        self.col = col


class ConsistencyError(ReticError):
    """Two independent computations that must agree did not."""
