"""Cue-lexicon coders for the content categories I, J, K, L.

Lexicons are CSV files (phrase,tag) holding lowercase token sequences.
Matching is whole-token: "butter" never matches the cue "but". A
trailing * on a phrase's last token turns it into a prefix wildcard,
so "suffer*" covers "suffering" without loosening exact entries.
"""

from __future__ import annotations

import csv
import logging
import re
from dataclasses import dataclass, field
from io import StringIO
from pathlib import Path

from .codebook import Uncodable
from .errors import MalformedLexicon
from .models import Document, DocumentMetadata

VALID_TAGS = (
    "negative", "positive", "evidence", "framework", "background",
    "experimental", "empirical", "theoretical",
)

logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_MAX_PHRASE_TOKENS = 6


def tokenize(text: str) -> list[str]:
    """Lowercase alphanumeric word tokens, punctuation discarded."""
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class CueEntry:
    phrase: str
    tag: str
    tokens: tuple[str, ...]
    wildcard: bool  # last token is a prefix


@dataclass
class CueLexicon:
    """A named list of cue phrases with tags, matched over token lists."""

    name: str
    entries: tuple[CueEntry, ...] = ()
    _index: dict[str, list[CueEntry]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        # Entries are indexed by their exact first token; single-token
        # wildcards land in a small scan-always bucket keyed by "".
        for entry in self.entries:
            if entry.wildcard and len(entry.tokens) == 1:
                self._index.setdefault("", []).append(entry)
            else:
                self._index.setdefault(entry.tokens[0], []).append(entry)

    def match(self, tokens: list[str]) -> list[tuple[str, str]]:
        """All (phrase, tag) hits in first-occurrence order, deduplicated."""
        hits: list[tuple[str, str]] = []
        seen: set[tuple[str, str]] = set()
        wildcard_singles = self._index.get("", [])
        for position, token in enumerate(tokens):
            for entry in self._index.get(token, []):
                if self._matches_at(entry, tokens, position):
                    key = (entry.phrase, entry.tag)
                    if key not in seen:
                        seen.add(key)
                        hits.append(key)
            for entry in wildcard_singles:
                if token.startswith(entry.tokens[0][:-1]):
                    key = (entry.phrase, entry.tag)
                    if key not in seen:
                        seen.add(key)
                        hits.append(key)
        return hits

    @staticmethod
    def _matches_at(entry: CueEntry, tokens: list[str], position: int) -> bool:
        if position + len(entry.tokens) > len(tokens):
            return False
        for offset, want in enumerate(entry.tokens):
            have = tokens[position + offset]
            last = offset == len(entry.tokens) - 1
            if entry.wildcard and last:
                if not have.startswith(want[:-1]):
                    return False
            elif have != want:
                return False
        return True


def _build_lexicon(name: str, rows: list[tuple[str, str]], source: str) -> CueLexicon:
    entries = []
    seen_phrases = set()
    for line_no, (phrase, tag) in rows:
        phrase = phrase.strip().lower()
        tag = tag.strip().lower()
        if not phrase:
            raise MalformedLexicon(f"{source}: empty phrase", line=line_no)
        if tag not in VALID_TAGS:
            raise MalformedLexicon(f"{source}: unknown tag {tag!r}", line=line_no)
        if phrase in seen_phrases:
            raise MalformedLexicon(f"{source}: duplicate phrase {phrase!r}", line=line_no)
        seen_phrases.add(phrase)
        wildcard = phrase.endswith("*")
        tokens = tuple(tokenize(phrase[:-1] if wildcard else phrase))
        if wildcard:
            if not tokens:
                raise MalformedLexicon(f"{source}: bare wildcard", line=line_no)
            tokens = tokens[:-1] + (tokens[-1] + "*",)
        if not tokens or len(tokens) > _MAX_PHRASE_TOKENS:
            raise MalformedLexicon(
                f"{source}: phrase {phrase!r} must have 1..{_MAX_PHRASE_TOKENS} tokens",
                line=line_no,
            )
        entries.append(CueEntry(phrase=phrase, tag=tag, tokens=tokens, wildcard=wildcard))
    return CueLexicon(name=name, entries=tuple(entries))


def load_lexicon(path: str | Path, name: str | None = None) -> CueLexicon:
    """Load a phrase,tag CSV; # comment lines and blanks are skipped."""
    path = Path(path)
    rows = []
    text = path.read_text(encoding="utf-8")
    reader = csv.reader(StringIO(text))
    header_seen = False
    for line_no, row in enumerate(reader, start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if row[0].lstrip().startswith("#"):
            continue
        if not header_seen:
            header_seen = True
            if [cell.strip().lower() for cell in row[:2]] == ["phrase", "tag"]:
                continue
            raise MalformedLexicon(f"{path.name}: missing phrase,tag header", line=line_no)
        if len(row) < 2:
            raise MalformedLexicon(f"{path.name}: expected phrase,tag", line=line_no)
        rows.append((line_no, (row[0], row[1])))
    if not rows:
        logger.warning("%s: empty lexicon", path.name)
    return _build_lexicon(name or path.stem, rows, path.name)


@dataclass
class LexiconSet:
    """The five lexicons the content coders draw from."""

    negative: CueLexicon
    positive: CueLexicon
    evidence: CueLexicon
    framework: CueLexicon
    focus: CueLexicon


def code_disposition(
    context_text: str, lexicons: LexiconSet
) -> tuple[str, list[tuple[str, str]], str]:
    """Sentiment toward the cited work from the context window."""
    tokens = tokenize(context_text)
    negative = lexicons.negative.match(tokens)
    positive = lexicons.positive.match(tokens)
    matches = negative + positive
    if negative and positive:
        return "J3", matches, "J:cues:mixed"
    if negative:
        return "J2", matches, "J:cues:negative"
    if positive:
        return "J1", matches, "J:cues:positive"
    return "J4", [], "J:cues:none"


_LOCATION_PRIOR = {
    "D1": "I1", "D2": "I1", "D3": "I1",
    "D4": "I2", "D5": "I3", "D6": "I4", "D7": "I1",
}


def code_function(
    context_text: str, location: str, lexicons: LexiconSet
) -> tuple[str, list[tuple[str, str]], str]:
    """Why the work is cited: criticism, evidence, method, background.

    Cue precedence is criticism, then evidence, then framework; with no
    cue the section location decides.
    """
    tokens = tokenize(context_text)
    negative = lexicons.negative.match(tokens)
    if negative:
        return "I4", negative, f"I:cue:{negative[0][0]}"
    evidence = lexicons.evidence.match(tokens)
    if evidence:
        return "I3", evidence, f"I:cue:{evidence[0][0]}"
    framework = lexicons.framework.match(tokens)
    if framework:
        return "I2", framework, f"I:cue:{framework[0][0]}"
    value = _LOCATION_PRIOR[location]
    return value, [], f"I:prior:{location}"


def load_venue_map(path: str | Path) -> tuple[tuple[str, str], ...]:
    """Load venue_pattern,K_value rows; order defines match priority."""
    path = Path(path)
    mapping = []
    reader = csv.reader(StringIO(path.read_text(encoding="utf-8")))
    header_seen = False
    for line_no, row in enumerate(reader, start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if row[0].lstrip().startswith("#"):
            continue
        if not header_seen:
            header_seen = True
            if [cell.strip().lower() for cell in row[:2]] == ["venue_pattern", "k_value"]:
                continue
            raise MalformedLexicon(
                f"{path.name}: missing venue_pattern,K_value header", line=line_no
            )
        if len(row) < 2 or row[1].strip() not in ("K1", "K2", "K3", "K4"):
            raise MalformedLexicon(f"{path.name}: expected pattern,K1..K4", line=line_no)
        mapping.append((row[0].strip().lower(), row[1].strip()))
    return tuple(mapping)


def code_domain(
    metadata: DocumentMetadata, venue_map: tuple[tuple[str, str], ...]
) -> tuple[str | Uncodable, str]:
    """Domain of the citing document from override or venue mapping."""
    if metadata.domain_override:
        return metadata.domain_override, "K:override"
    venue = metadata.venue_name.lower()
    if venue:
        for pattern, value in venue_map:
            if pattern in venue:
                return value, f"K:venue-match:{pattern}"
    return Uncodable("unmapped-venue"), "K:unmapped"


_FOCUS_PRIORS = {"K1": "L2", "K2": "L1", "K3": "L3", "K4": "L3"}
_FOCUS_CUE_ORDER = (("experimental", "L3"), ("empirical", "L2"), ("theoretical", "L1"))


def document_focus_matches(doc: Document, lexicons: LexiconSet) -> list[tuple[str, str]]:
    """Focus-cue hits over the whole document body, computed once."""
    tokens = tokenize(" ".join(doc.sentences))
    return lexicons.focus.match(tokens)


def code_focus(
    domain: str | Uncodable, focus_matches: list[tuple[str, str]]
) -> tuple[str, str]:
    """Research focus: document-level cues override the domain prior."""
    for tag, value in _FOCUS_CUE_ORDER:
        for phrase, match_tag in focus_matches:
            if match_tag == tag:
                return value, f"L:cue:{phrase}"
    if isinstance(domain, Uncodable):
        return "L4", "L:default"
    return _FOCUS_PRIORS[domain], f"L:prior:{domain}"
