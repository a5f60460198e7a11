"""Category registry for the two-sided citation codebook.

Categories A..F describe the cited side of a citation, G..L the citing
side and its context. Each category slot in a coded record holds either
one of the values listed here or an explicit uncodable marker carrying
a reason.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownCategory

CATEGORIES: tuple[str, ...] = ("A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L")

VALUES: dict[str, tuple[str, ...]] = {
    "A": ("A1", "A2", "A3", "A4", "A5", "A6"),
    "B": ("B1", "B2"),
    "C": ("C1", "C2", "C3"),
    "D": ("D1", "D2", "D3", "D4", "D5", "D6", "D7"),
    "E": ("E1", "E2", "E3"),
    "F": ("F1", "F2", "F3"),
    "G": ("G1", "G2", "G3", "G4", "G5", "G6"),
    "H": ("H1", "H2"),
    "I": ("I1", "I2", "I3", "I4"),
    "J": ("J1", "J2", "J3", "J4"),
    "K": ("K1", "K2", "K3", "K4"),
    "L": ("L1", "L2", "L3", "L4"),
}

LABELS: dict[str, str] = {
    "A1": "journal article", "A2": "conference paper", "A3": "book or book chapter",
    "A4": "report or news", "A5": "link or personal page", "A6": "other document",
    "B1": "single author", "B2": "multiple authors",
    "C1": "reciprocal (self-citation)", "C2": "parallel (peer or coauthor)",
    "C3": "hierarchical (high-capital author)",
    "D1": "abstract", "D2": "introduction", "D3": "literature review",
    "D4": "methodology", "D5": "results or discussion", "D6": "conclusion",
    "D7": "other section",
    "E1": "mentioned once", "E2": "mentioned 2 to 4 times", "E3": "mentioned 5 or more times",
    "F1": "mention without specifics", "F2": "specific mention with interpretation",
    "F3": "direct quotation",
    "G1": "journal article", "G2": "conference paper", "G3": "book or book chapter",
    "G4": "report or news", "G5": "link or personal page", "G6": "other document",
    "H1": "single author", "H2": "multiple authors",
    "I1": "background or support", "I2": "method or framework source",
    "I3": "evidence or comparison", "I4": "criticism or limitation",
    "J1": "positive", "J2": "negative", "J3": "mixed", "J4": "neutral",
    "K1": "social sciences", "K2": "humanities", "K3": "natural sciences",
    "K4": "applied sciences and engineering",
    "L1": "theoretical research", "L2": "empirical research",
    "L3": "experimental research", "L4": "other focus",
}

UNCODABLE = "uncodable"


@dataclass(frozen=True)
class Uncodable:
    """Explicit uncodable slot value with the reason it happened."""

    reason: str


def require_category(letter: str) -> str:
    """Validate a category letter, raising UnknownCategory otherwise."""
    if letter not in VALUES:
        raise UnknownCategory(f"unknown category {letter!r}; expected one of {CATEGORIES}")
    return letter


def value_order(category: str) -> tuple[str, ...]:
    """Defined values for a category plus the trailing uncodable bucket."""
    return VALUES[require_category(category)] + (UNCODABLE,)
