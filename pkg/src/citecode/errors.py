"""Exception types shared across the package.

Parsing failures are structured: they subclass ParseError and carry an
optional 1-based line number, so callers can report or skip a bad
document without losing the rest of a corpus run.
"""

from __future__ import annotations


class CitecodeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CitecodeError):
    """Structured parsing failure with an optional 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedInput(ParseError):
    """Input violates the document grammar."""


class EmptyDocument(ParseError):
    """Document contains no sections at all."""


class DuplicateRefId(ParseError):
    """Two reference entries carry the same explicit label."""


class MalformedLexicon(ParseError):
    """Cue lexicon file violates its format or repeats a phrase."""


class MalformedConfig(ParseError):
    """Pipeline configuration file is invalid."""


class UnparseableName(CitecodeError):
    """Author name contains no usable alphabetic content."""


class UnknownRef(CitecodeError):
    """A ref_id was requested that the document does not define."""


class InvalidCount(CitecodeError):
    """A mention count outside the valid range was supplied."""


class LengthMismatch(CitecodeError):
    """Two code sequences compared for agreement differ in length."""


class IncompleteCoding(CitecodeError):
    """A coded record is missing a category slot or its audit trail."""


class NoOverlap(CitecodeError):
    """Coded and gold records share no (doc_id, citation_id) pairs."""


class UnknownCategory(CitecodeError):
    """A category letter outside A..L was requested."""
