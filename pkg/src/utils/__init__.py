from .errors import (
    PregameError, InterfaceMismatch, DomainTooLarge, EmptyChoiceSet,
    NotClosed, LengthMismatch, NonNumericOutcome, ShapeError,
    Span, DslError, LexError, ParseError, UnknownName, DuplicateDecl,
    TableError, DslInterfaceMismatch, ElaborationError, InvalidDual,
)
from .shared_utils import stable_bucket, stable_coin

__all__ = [
    "PregameError", "InterfaceMismatch", "DomainTooLarge", "EmptyChoiceSet",
    "NotClosed", "LengthMismatch", "NonNumericOutcome", "ShapeError",
    "Span", "DslError", "LexError", "ParseError", "UnknownName", "DuplicateDecl",
    "TableError", "DslInterfaceMismatch", "ElaborationError", "InvalidDual",
    "stable_bucket", "stable_coin",
]
