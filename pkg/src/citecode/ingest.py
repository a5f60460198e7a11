"""Document ingestion for the two supported input grammars.

Plain-annotated text::

    #META id: demo
    #META authors: Smith, J.; Doe, A.
    #SECTION Introduction
    Body text. More body text.

    A blank line separates paragraphs.
    #REFERENCES
    [1] Smith, J. (2011). A title. A Journal, 4(2), 1-10.

Structured XML uses the element names fixed in docs/formats.md. Both
parsers produce the same Document model; serialize_document renders the
canonical XML form, and re-parsing that form reproduces the Document
field by field.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .errors import DuplicateRefId, EmptyDocument, MalformedInput, UnparseableName
from .models import VENUE_TYPES, AuthorName, Document, DocumentMetadata, ReferenceEntry, Section
from .names import normalize_author_key
from .refparse import derive_ref_id, parse_reference_entry
from .sentences import DEFAULT_ABBREVIATIONS, segment_sentences

FORMAT_PLAIN = "plain_annotated"
FORMAT_XML = "structured_xml"
FORMATS = (FORMAT_PLAIN, FORMAT_XML)

_META_KEYS = ("id", "title", "authors", "venue", "venue-type", "year", "domain")
_DOMAIN_VALUES = ("K1", "K2", "K3", "K4")

# Section header -> location value. Lookup is case-insensitive on the
# stripped header; "method"/"conclusion" match as prefixes.
_LOCATION_EXACT = {
    "abstract": "D1",
    "introduction": "D2",
    "background": "D2",
    "literature review": "D3",
    "related work": "D3",
    "prior work": "D3",
    "materials and methods": "D4",
    "experimental setup": "D4",
    "results": "D5",
    "discussion": "D5",
    "findings": "D5",
    "evaluation": "D5",
    "experiments": "D5",
    "summary": "D6",
    "future work": "D6",
}
_LOCATION_PREFIXES = (("method", "D4"), ("conclusion", "D6"))


def normalize_section_header(header: str) -> str:
    """Map a raw section header to its location value D1..D7."""
    key = " ".join(header.lower().split())
    value = _LOCATION_EXACT.get(key)
    if value:
        return value
    for prefix, prefixed_value in _LOCATION_PREFIXES:
        if key.startswith(prefix):
            return prefixed_value
    return "D7"


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedInput(f"input is not valid UTF-8: {exc}") from None


def _parse_year(text: str, warnings: list[str]) -> int | None:
    try:
        year = int(text.strip())
    except ValueError:
        warnings.append(f"unparseable year {text!r} ignored")
        return None
    if not 1400 <= year <= 2100:
        warnings.append(f"year {year} outside 1400..2100 ignored")
        return None
    return year


def _parse_authors_meta(text: str, warnings: list[str]) -> list[AuthorName]:
    authors = []
    for raw in text.split(";"):
        raw = raw.strip()
        if not raw:
            continue
        try:
            authors.append(AuthorName(raw=raw, key=normalize_author_key(raw)))
        except UnparseableName:
            warnings.append(f"unparseable author name {raw!r} skipped")
    return authors


def _finalize_references(
    entries: list[tuple[ReferenceEntry, bool, int | None]], warnings: list[str]
) -> list[ReferenceEntry]:
    """Assign ids, enforce uniqueness of explicit labels."""
    seen: dict[str, bool] = {}
    out = []
    for ordinal, (entry, explicit, line_no) in enumerate(entries, start=1):
        ref_id = entry.ref_id or derive_ref_id(entry, ordinal)
        if ref_id in seen:
            if explicit and seen[ref_id]:
                raise DuplicateRefId(f"duplicate reference label {ref_id!r}", line=line_no)
            base = ref_id
            counter = 2
            while f"{base}-{counter}" in seen:
                counter += 1
            ref_id = f"{base}-{counter}"
            warnings.append(f"derived reference id {base!r} repeated; using {ref_id!r}")
        seen[ref_id] = explicit
        entry.ref_id = ref_id
        out.append(entry)
    return out


def _build_document(
    meta_fields: dict[str, str],
    section_blocks: list[tuple[str, list[str]]],
    entries: list[tuple[ReferenceEntry, bool, int | None]],
    warnings: list[str],
    abbreviations: tuple[str, ...],
    had_reference_block: bool,
) -> Document:
    if not section_blocks:
        raise EmptyDocument("document has no sections")
    doc_id = meta_fields.get("id", "").strip()
    if not doc_id:
        raise MalformedInput("missing required metadata field 'id'")

    venue_type = meta_fields.get("venue-type", "").strip().lower()
    if venue_type and venue_type not in VENUE_TYPES:
        warnings.append(f"unknown venue-type {venue_type!r}; using 'other'")
        venue_type = "other"
    domain = meta_fields.get("domain", "").strip() or None
    if domain and domain not in _DOMAIN_VALUES:
        warnings.append(f"invalid domain override {domain!r} ignored")
        domain = None
    year = None
    if meta_fields.get("year", "").strip():
        year = _parse_year(meta_fields["year"], warnings)
    authors = _parse_authors_meta(meta_fields.get("authors", ""), warnings)
    if not authors:
        warnings.append("metadata-incomplete: no authors")

    metadata = DocumentMetadata(
        doc_id=doc_id,
        title=" ".join(meta_fields.get("title", "").split()),
        authors=authors,
        venue_name=" ".join(meta_fields.get("venue", "").split()),
        venue_type=venue_type or "other",
        year=year,
        domain_override=domain,
    )

    sentences: list[str] = []
    sections: list[Section] = []
    for header, paragraphs in section_blocks:
        start = len(sentences)
        for paragraph in paragraphs:
            sentences.extend(segment_sentences(paragraph, abbreviations))
        if len(sentences) == start:
            warnings.append(f"section {header!r} has no sentences")
        sections.append(
            Section(
                raw_header=header,
                normalized_location=normalize_section_header(header),
                start=start,
                end=len(sentences),
            )
        )

    references = _finalize_references(entries, warnings)
    if not had_reference_block:
        warnings.append("missing-references: no reference block")
    elif not references:
        warnings.append("empty reference list")

    return Document(
        metadata=metadata,
        sections=sections,
        sentences=sentences,
        references=references,
        warnings=warnings,
    )


def _parse_plain(text: str, abbreviations: tuple[str, ...]) -> Document:
    meta_fields: dict[str, str] = {}
    section_blocks: list[tuple[str, list[str]]] = []
    reference_lines: list[tuple[str, int]] = []
    warnings: list[str] = []
    in_references = False
    had_reference_block = False
    paragraph: list[str] = []

    def flush_paragraph() -> None:
        if paragraph and section_blocks:
            section_blocks[-1][1].append(" ".join(paragraph))
        paragraph.clear()

    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#META"):
            flush_paragraph()
            body = stripped[len("#META"):].strip()
            if ":" not in body:
                warnings.append(f"line {line_no}: #META without 'key: value' skipped")
                continue
            key, _, value = body.partition(":")
            key = key.strip().lower()
            if key not in _META_KEYS:
                warnings.append(f"line {line_no}: unknown #META key {key!r} skipped")
                continue
            if section_blocks or in_references:
                warnings.append(f"line {line_no}: #META after body skipped")
                continue
            meta_fields[key] = value.strip()
        elif stripped.startswith("#SECTION"):
            flush_paragraph()
            if in_references:
                warnings.append(f"line {line_no}: #SECTION after #REFERENCES skipped")
                continue
            header = stripped[len("#SECTION"):].strip()
            if not header:
                warnings.append(f"line {line_no}: #SECTION without header skipped")
                continue
            section_blocks.append((header, []))
        elif stripped.startswith("#REFERENCES"):
            flush_paragraph()
            in_references = True
            had_reference_block = True
        elif stripped.startswith("#"):
            warnings.append(f"line {line_no}: unknown directive {stripped.split()[0]!r} skipped")
        elif in_references:
            if stripped:
                reference_lines.append((stripped, line_no))
        elif not stripped:
            flush_paragraph()
        elif not section_blocks:
            warnings.append(f"line {line_no}: body text before first #SECTION skipped")
        else:
            paragraph.append(stripped)
    flush_paragraph()
    entries: list[tuple[ReferenceEntry, bool, int | None]] = []
    for line, line_no in reference_lines:
        entry = parse_reference_entry(line)
        entries.append((entry, bool(entry.ref_id), line_no))
    return _build_document(
        meta_fields, section_blocks, entries, warnings,
        abbreviations, had_reference_block,
    )


def _parse_xml(text: str, abbreviations: tuple[str, ...]) -> Document:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line = exc.position[0] if getattr(exc, "position", None) else None
        raise MalformedInput(f"XML parse failure: {exc}", line=line) from None
    if root.tag != "document":
        raise MalformedInput(f"root element must be <document>, found <{root.tag}>")

    warnings: list[str] = []
    meta_fields: dict[str, str] = {}
    meta_el = root.find("metadata")
    if meta_el is not None:
        for child in meta_el:
            if child.tag == "authors":
                raws = [(a.text or "").strip() for a in child.findall("author")]
                meta_fields["authors"] = "; ".join(r for r in raws if r)
            elif child.tag == "venue":
                meta_fields["venue"] = (child.text or "").strip()
                if child.get("type"):
                    meta_fields["venue-type"] = child.get("type", "")
            elif child.tag in ("id", "title", "year", "domain"):
                meta_fields[child.tag] = (child.text or "").strip()
            else:
                warnings.append(f"unknown metadata element <{child.tag}> skipped")

    section_blocks: list[tuple[str, list[str]]] = []
    body_el = root.find("body")
    if body_el is not None:
        for section_el in body_el.findall("section"):
            header = section_el.get("header", "").strip()
            if not header:
                warnings.append("<section> without header attribute skipped")
                continue
            paragraphs = [
                " ".join((p.text or "").split())
                for p in section_el.findall("paragraph")
            ]
            section_blocks.append((header, [p for p in paragraphs if p]))

    entries: list[tuple[ReferenceEntry, bool, int | None]] = []
    refs_el = root.find("references")
    had_reference_block = refs_el is not None
    if refs_el is not None:
        for ref_el in refs_el.findall("reference"):
            raw = " ".join((ref_el.text or "").split())
            if not raw:
                warnings.append("empty <reference> element skipped")
                continue
            entry = parse_reference_entry(raw, default_ref_id=ref_el.get("id"))
            entries.append((entry, ref_el.get("id") is not None, None))
    return _build_document(
        meta_fields, section_blocks, entries, warnings,
        abbreviations, had_reference_block,
    )


def parse_document(
    data: bytes | str,
    format: str = FORMAT_PLAIN,
    abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS,
) -> Document:
    """Parse one document in the named input format."""
    if format not in FORMATS:
        raise MalformedInput(f"unknown input format {format!r}")
    text = _decode(data)
    if format == FORMAT_XML:
        return _parse_xml(text, abbreviations)
    return _parse_plain(text, abbreviations)


def serialize_document(doc: Document) -> str:
    """Render the canonical XML interchange form of a Document.

    Each sentence is written as its own paragraph, so re-parsing
    re-segments each sentence alone and reproduces the sentence list.
    """
    meta = doc.metadata
    lines = ["<document>", "  <metadata>"]
    lines.append(f"    <id>{escape(meta.doc_id)}</id>")
    if meta.title:
        lines.append(f"    <title>{escape(meta.title)}</title>")
    if meta.authors:
        lines.append("    <authors>")
        for author in meta.authors:
            lines.append(f"      <author>{escape(author.raw)}</author>")
        lines.append("    </authors>")
    if meta.venue_name or meta.venue_type:
        lines.append(
            f"    <venue type={quoteattr(meta.venue_type)}>{escape(meta.venue_name)}</venue>"
        )
    if meta.year is not None:
        lines.append(f"    <year>{meta.year}</year>")
    if meta.domain_override:
        lines.append(f"    <domain>{meta.domain_override}</domain>")
    lines.append("  </metadata>")
    lines.append("  <body>")
    for section in doc.sections:
        lines.append(f"    <section header={quoteattr(section.raw_header)}>")
        for index in section.sentence_indices:
            lines.append(f"      <paragraph>{escape(doc.sentences[index])}</paragraph>")
        lines.append("    </section>")
    lines.append("  </body>")
    lines.append("  <references>")
    for ref in doc.references:
        lines.append(f"    <reference id={quoteattr(ref.ref_id)}>{escape(ref.raw)}</reference>")
    lines.append("  </references>")
    lines.append("</document>")
    return "\n".join(lines) + "\n"
