"""Exceptions raised by the matroid moves library."""

from typing import Any, Dict, List, Optional


class MatroidMovesError(Exception):
    """Base exception for all library errors."""

    pass


class DomainError(MatroidMovesError, ValueError):
    """Raised when an argument lies outside an operation's domain."""

    pass


class UnsupportedError(MatroidMovesError):
    """Raised when a request is valid but beyond what the library computes."""

    pass


class ConfigError(MatroidMovesError):
    """Raised when configuration values cannot be parsed."""

    pass


class InternalError(MatroidMovesError):
    """Raised when a guaranteed invariant is violated."""

    pass


class ReplayError(MatroidMovesError):
    """Raised when a move sequence cannot be replayed.

    Attributes:
        index: Position of the failing move (0-based)
        move: Text form of the failing move
    """

    def __init__(self, message: str, index: int, move: str):
        super().__init__(message)
        self.index = index
        self.move = move


class BudgetExhaustedError(MatroidMovesError):
    """Raised when an orbit search exceeds its visit budget.

    Attributes:
        table: The partial orbit table built before the budget ran out
        frontier: States discovered but not yet expanded
    """

    def __init__(self, message: str, table: Any = None, frontier: Optional[List[int]] = None):
        super().__init__(message)
        self.table = table
        self.frontier = frontier or []


class IndeterminateError(BudgetExhaustedError):
    """Raised when a reachability query runs out of budget unresolved."""

    pass


class CertificateRefused(MatroidMovesError):
    """Raised when an unreachability certificate cannot be issued.

    Attributes:
        check: Name of the failing sub-check
        counterexample: Data describing the failure
    """

    def __init__(self, message: str, check: str, counterexample: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.check = check
        self.counterexample = counterexample or {}


class FormatError(MatroidMovesError, ValueError):
    """Raised when matroid, sequence or certificate text is malformed.

    Attributes:
        line: 1-based line number of the offending line (None if unknown)
        path: Source file, if the text came from a file
    """

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        location = ""
        if path is not None:
            location = f"{path}:"
        if line is not None:
            location = f"{location}{line}: "
        elif location:
            location = f"{location} "
        super().__init__(f"{location}{message}")
        self.line = line
        self.path = path
