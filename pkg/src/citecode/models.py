"""Core document model produced by ingestion.

A Document is a flat, ordered list of sentences plus sections that map
onto contiguous sentence ranges, document metadata, and the parsed
reference list. Warnings collect tolerated irregularities (missing
reference block, unparseable lines) and are excluded from equality so
round-trip comparisons look only at content.
"""

from __future__ import annotations

from dataclasses import dataclass, field

VENUE_TYPES = ("journal", "conference", "book", "report", "web", "other")

LINK_RESOLVED = "resolved"
LINK_UNRESOLVED = "unresolved"
LINK_AMBIGUOUS = "ambiguous"

STYLE_PARENTHETICAL = "parenthetical"
STYLE_NARRATIVE = "narrative"
STYLE_NUMERIC = "numeric"

LEVEL_SINGLE = "single_sentence"
LEVEL_CLUSTER = "sentence_cluster"


@dataclass(frozen=True)
class AuthorName:
    """One author: the string as written plus the normalized key."""

    raw: str
    key: str


@dataclass
class DocumentMetadata:
    doc_id: str
    title: str = ""
    authors: list[AuthorName] = field(default_factory=list)
    venue_name: str = ""
    venue_type: str = "other"
    year: int | None = None
    domain_override: str | None = None  # K1..K4 when present


@dataclass
class Section:
    """A section header and the half-open sentence range it covers."""

    raw_header: str
    normalized_location: str  # D1..D7
    start: int
    end: int

    @property
    def sentence_indices(self) -> range:
        return range(self.start, self.end)


@dataclass
class ReferenceEntry:
    """One bibliography entry with parse results and venue signals."""

    ref_id: str
    raw: str
    authors: list[AuthorName] = field(default_factory=list)
    year: int | None = None
    year_suffix: str | None = None
    venue_signals: frozenset[str] = frozenset()


@dataclass
class Document:
    metadata: DocumentMetadata
    sections: list[Section]
    sentences: list[str]
    references: list[ReferenceEntry]
    warnings: list[str] = field(default_factory=list, compare=False)

    def section_of(self, sentence_index: int) -> Section:
        for section in self.sections:
            if section.start <= sentence_index < section.end:
                return section
        raise IndexError(f"sentence index {sentence_index} outside all sections")

    def reference_by_id(self, ref_id: str) -> ReferenceEntry | None:
        for ref in self.references:
            if ref.ref_id == ref_id:
                return ref
        return None


@dataclass(frozen=True)
class InTextCitation:
    """One in-text mention of a referenced work.

    char_span is relative to the sentence text; slicing it back out of
    the sentence re-parses to the same marker. Multi-work parentheses
    expand to several citations sharing one span.
    """

    citation_id: str
    ref_id: str | None
    link_status: str
    sentence_index: int
    char_span: tuple[int, int]
    marker_style: str
    inside_example_cue: bool
    surnames: tuple[str, ...] = ()
    year: int | None = None
    year_suffix: str | None = None
    et_al: bool = False
    has_page_locator: bool = False
    numeric_label: str | None = None


@dataclass(frozen=True)
class CitationContext:
    """The sentence window handed to the content coders."""

    citation_id: str
    level: str
    sentence_indices: tuple[int, ...]
    text: str
