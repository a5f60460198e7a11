"""End-to-end corpus runs: parse, link, code, and summarize.

The flow is a parallel map over documents (parsing and citation
extraction), a serial reduction building the coauthorship graph, a
second parallel pass for the per-citation codes (relation coding needs
the finished graph), and a final serial, sorted write. Outputs carry no
timestamps, so a corpus coded twice produces byte-identical files at
any parallelism level.
"""

from __future__ import annotations

import concurrent.futures
import json
from dataclasses import dataclass, field
from pathlib import Path

from .citations import extract_citations, extract_context, mention_counts
from .codebook import Uncodable
from .config import PipelineConfig
from .errors import CitecodeError, MalformedInput
from .ingest import FORMAT_PLAIN, FORMAT_XML, parse_document
from .models import (
    Document,
    InTextCitation,
    LINK_AMBIGUOUS,
    LINK_RESOLVED,
    LINK_UNRESOLVED,
)
from .network import (
    CapitalScore,
    CoauthorGraph,
    build_coauthor_graph,
    capital_scores,
    code_relation,
    write_edge_list,
)
from .records import CodedCitation, assemble_record, sort_records, write_jsonl
from .semantic import (
    LexiconSet,
    code_disposition,
    code_domain,
    code_focus,
    code_function,
    document_focus_matches,
    load_lexicon,
    load_venue_map,
)
from .sentences import load_abbreviations
from .syntactic import (
    code_authorship,
    code_document_type,
    code_frequency,
    code_location,
    code_style,
)

KNOWN_FORMATS = (FORMAT_PLAIN, FORMAT_XML)


@dataclass(frozen=True)
class Resources:
    """Lexicons, venue mapping, and abbreviation list, loaded once."""

    lexicons: LexiconSet
    venue_map: tuple[tuple[str, str], ...]
    abbreviations: tuple[str, ...]


def load_resources(config: PipelineConfig) -> Resources:
    lexicons = LexiconSet(
        negative=load_lexicon(config.lexicon_negative, "negative"),
        positive=load_lexicon(config.lexicon_positive, "positive"),
        evidence=load_lexicon(config.lexicon_evidence, "evidence"),
        framework=load_lexicon(config.lexicon_framework, "framework"),
        focus=load_lexicon(config.lexicon_focus, "focus"),
    )
    return Resources(
        lexicons=lexicons,
        venue_map=load_venue_map(config.venue_map),
        abbreviations=load_abbreviations(config.abbreviations),
    )


def read_manifest(path: str | Path) -> list[tuple[Path, str]]:
    """Read a corpus manifest: one ``<path><TAB><format>`` per line.

    Blank lines and # comments are skipped. Relative document paths are
    resolved against the manifest's directory.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read manifest {path}: {exc}") from None
    entries: list[tuple[Path, str]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "\t" not in stripped:
            raise MalformedInput(
                f"{path.name}: expected <path><TAB><format>", line=line_no
            )
        doc_part, _, format_part = stripped.partition("\t")
        doc_format = format_part.strip()
        if doc_format not in KNOWN_FORMATS:
            raise MalformedInput(
                f"{path.name}: unknown format {doc_format!r} "
                f"(expected one of {', '.join(KNOWN_FORMATS)})",
                line=line_no,
            )
        doc_path = Path(doc_part.strip())
        if not doc_path.is_absolute():
            doc_path = path.parent / doc_path
        entries.append((doc_path, doc_format))
    if not entries:
        raise MalformedInput(f"{path.name}: manifest lists no documents")
    return entries


def _map_maybe_parallel(function, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(function, items))


def parse_corpus(
    entries: list[tuple[Path, str]],
    abbreviations: tuple[str, ...],
    jobs: int = 1,
    strict: bool = False,
) -> tuple[list[Document], list[tuple[str, str]]]:
    """Parse every manifest entry; failures are skipped unless strict.

    Returns the parsed documents in manifest order plus a list of
    (path, error message) pairs for the skipped ones.
    """

    def parse_one(entry: tuple[Path, str]):
        doc_path, doc_format = entry
        try:
            data = doc_path.read_bytes()
        except OSError as exc:
            raise MalformedInput(f"cannot read {doc_path}: {exc}") from None
        return parse_document(data, doc_format, abbreviations)

    skipped: list[tuple[str, str]] = []
    documents: list[Document] = []
    seen_ids: set[str] = set()
    if strict:
        results = _map_maybe_parallel(parse_one, entries, jobs)
    else:
        def safe(entry):
            try:
                return parse_one(entry)
            except CitecodeError as exc:
                return exc
        results = _map_maybe_parallel(safe, entries, jobs)
    for (doc_path, _), outcome in zip(entries, results):
        if isinstance(outcome, CitecodeError):
            skipped.append((str(doc_path), str(outcome)))
            continue
        doc_id = outcome.metadata.doc_id
        if doc_id in seen_ids:
            message = f"duplicate document id {doc_id!r}"
            if strict:
                raise MalformedInput(f"{doc_path}: {message}")
            skipped.append((str(doc_path), message))
            continue
        seen_ids.add(doc_id)
        documents.append(outcome)
    return documents, skipped


_LINK_REASON = {
    LINK_UNRESOLVED: "unresolved-reference",
    LINK_AMBIGUOUS: "ambiguous-reference",
}


def code_document(
    doc: Document,
    citations: list[InTextCitation],
    resources: Resources,
    config: PipelineConfig,
    graph: CoauthorGraph,
    scores: dict[str, CapitalScore],
) -> list[CodedCitation]:
    """Produce one full record per citation, resolved or not.

    Unresolved and ambiguous citations keep their context-side codes;
    the slots that need the linked reference entry become uncodable.
    """
    meta = doc.metadata
    lexicons = resources.lexicons
    citing_keys = [a.key for a in meta.authors]

    # Citing-document codes are constant across the document.
    domain_value, domain_trace = code_domain(meta, resources.venue_map)
    focus_value, focus_trace = code_focus(
        domain_value, document_focus_matches(doc, lexicons)
    )
    g_value, g_trace = code_document_type(meta)
    h_value, h_trace = code_authorship(meta.authors, "H")
    counts = mention_counts(doc, citations)

    records = []
    for citation in citations:
        slots: dict[str, object] = {}
        trace: list[str] = []
        section = doc.section_of(citation.sentence_index)
        d_value, d_trace = code_location(section)
        slots["D"] = d_value
        trace.append(d_trace)

        context = extract_context(
            doc, citation, config.window_before, config.window_after
        )
        f_value, f_trace = code_style(
            citation, doc.sentences[citation.sentence_index]
        )
        slots["F"] = f_value
        trace.append(f_trace)

        i_value, _, i_trace = code_function(context.text, d_value, lexicons)
        slots["I"] = i_value
        trace.append(i_trace)
        j_value, j_matches, j_trace = code_disposition(context.text, lexicons)
        slots["J"] = j_value
        trace.append(j_trace)

        slots["G"] = g_value
        trace.append(g_trace)
        slots["H"] = h_value
        trace.append(h_trace)
        slots["K"] = domain_value
        trace.append(domain_trace)
        slots["L"] = focus_value
        trace.append(focus_trace)

        if citation.link_status == LINK_RESOLVED:
            ref = doc.reference_by_id(citation.ref_id)
            a_value, a_trace = code_document_type(ref)
            slots["A"] = a_value
            trace.append(a_trace)
            b_value, b_trace = code_authorship(ref.authors, "B")
            slots["B"] = b_value
            trace.append(b_trace)
            c_value, c_trace = code_relation(
                citing_keys,
                [a.key for a in ref.authors],
                graph,
                scores,
                config.delta,
            )
            slots["C"] = c_value
            trace.append(c_trace)
            e_value, e_trace = code_frequency(counts[citation.ref_id])
            slots["E"] = e_value
            trace.append(e_trace)
        else:
            reason = _LINK_REASON[citation.link_status]
            for category in ("A", "B", "C", "E"):
                slots[category] = Uncodable(reason)

        records.append(
            assemble_record(
                doc_id=meta.doc_id,
                citation_id=citation.citation_id,
                ref_id=citation.ref_id,
                link_status=citation.link_status,
                sentence_index=citation.sentence_index,
                context_level=context.level,
                context_sentences=context.sentence_indices,
                slots=slots,
                matched_cues=j_matches,
                rule_trace=trace,
            )
        )
    return records


@dataclass
class RunResult:
    """Everything a corpus run produces, before any file is written."""

    records: list[CodedCitation]
    resolved_records: list[CodedCitation]
    documents: list[Document]
    graph: CoauthorGraph
    scores: dict[str, CapitalScore]
    skipped: list[tuple[str, str]] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def code_corpus(
    documents: list[Document],
    config: PipelineConfig | None = None,
    resources: Resources | None = None,
    jobs: int = 1,
    skipped: list[tuple[str, str]] | None = None,
) -> RunResult:
    """Code a parsed corpus: graph first, then every citation."""
    config = config or PipelineConfig()
    resources = resources or load_resources(config)
    skipped = list(skipped or [])

    extracted = _map_maybe_parallel(extract_citations, documents, jobs)
    graph = build_coauthor_graph([doc.metadata for doc in documents])
    scores = capital_scores(graph)

    def code_one(pair):
        doc, citations = pair
        return code_document(doc, citations, resources, config, graph, scores)

    per_doc = _map_maybe_parallel(code_one, list(zip(documents, extracted)), jobs)
    records = sort_records([record for chunk in per_doc for record in chunk])
    resolved = [r for r in records if r.link_status == LINK_RESOLVED]

    summary = _build_summary(
        documents, extracted, records, resolved, graph, skipped, config
    )
    return RunResult(
        records=records,
        resolved_records=resolved,
        documents=documents,
        graph=graph,
        scores=scores,
        skipped=skipped,
        summary=summary,
    )


def _marker_text(doc: Document, citation: InTextCitation) -> str:
    start, end = citation.char_span
    return doc.sentences[citation.sentence_index][start:end]


def _build_summary(
    documents: list[Document],
    extracted: list[list[InTextCitation]],
    records: list[CodedCitation],
    resolved: list[CodedCitation],
    graph: CoauthorGraph,
    skipped: list[tuple[str, str]],
    config: PipelineConfig,
) -> dict:
    unresolved_items = []
    ambiguous_items = []
    for doc, citations in zip(documents, extracted):
        for citation in citations:
            if citation.link_status == LINK_RESOLVED:
                continue
            item = {
                "doc_id": doc.metadata.doc_id,
                "citation_id": citation.citation_id,
                "sentence_index": citation.sentence_index,
                "marker": _marker_text(doc, citation),
            }
            if citation.link_status == LINK_UNRESOLVED:
                unresolved_items.append(item)
            else:
                ambiguous_items.append(item)
    key = lambda item: (item["doc_id"], item["citation_id"])
    unresolved_items.sort(key=key)
    ambiguous_items.sort(key=key)
    warnings = {
        doc.metadata.doc_id: list(doc.warnings)
        for doc in sorted(documents, key=lambda d: d.metadata.doc_id)
        if doc.warnings
    }
    total = len(records)
    return {
        "documents": len(documents),
        "citations": {
            "total": total,
            "resolved": len(resolved),
            "unresolved": len(unresolved_items),
            "ambiguous": len(ambiguous_items),
        },
        "records_written": len(resolved),
        "coauthor_graph": {
            "authors": len(graph.nodes),
            "edges": len(graph.edges),
        },
        "skipped_documents": [
            {"path": path, "error": error}
            for path, error in sorted(skipped)
        ],
        "unresolved_citations": unresolved_items,
        "ambiguous_citations": ambiguous_items,
        "document_warnings": warnings,
        "config": config.echo(),
    }


def run_pipeline(
    entries: list[tuple[Path, str]],
    config: PipelineConfig | None = None,
    resources: Resources | None = None,
    jobs: int = 1,
    strict: bool = False,
) -> RunResult:
    """Manifest entries in, fully coded corpus out."""
    config = config or PipelineConfig()
    resources = resources or load_resources(config)
    documents, skipped = parse_corpus(
        entries, resources.abbreviations, jobs=jobs, strict=strict
    )
    return code_corpus(
        documents, config, resources, jobs=jobs, skipped=skipped
    )


def write_outputs(result: RunResult, output_dir: str | Path) -> dict[str, Path]:
    """Write the three deterministic run artifacts.

    coded.jsonl holds one record per resolved citation; summary.json
    carries counts, warnings, skips, and the effective configuration;
    coauthors.tsv is the coauthorship edge list.
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "coded": out / "coded.jsonl",
        "summary": out / "summary.json",
        "edges": out / "coauthors.tsv",
    }
    write_jsonl(result.resolved_records, paths["coded"])
    paths["summary"].write_text(
        json.dumps(result.summary, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    write_edge_list(result.graph, paths["edges"])
    return paths
