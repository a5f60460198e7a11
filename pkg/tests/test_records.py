"""Record validation and byte-stable JSONL serialization."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from citecode.codebook import CATEGORIES, VALUES, Uncodable
from citecode.errors import IncompleteCoding
from citecode.records import (
    assemble_record,
    read_jsonl,
    record_from_json,
    record_to_json,
    sort_records,
    write_jsonl,
)

FULL_SLOTS = {
    "A": "A1", "B": "B1", "C": "C2", "D": "D2", "E": "E1", "F": "F1",
    "G": "G1", "H": "H2", "I": "I1", "J": "J4", "K": "K1", "L": "L2",
}
FULL_TRACE = [f"{cat}:rule" for cat in CATEGORIES]


def build(slots=None, trace=None, **overrides):
    kwargs = dict(
        doc_id="doc-1",
        citation_id="c0001",
        ref_id="smith-2011",
        link_status="resolved",
        sentence_index=4,
        context_level="sentence_cluster",
        context_sentences=(3, 4, 5),
        slots=dict(FULL_SLOTS if slots is None else slots),
        matched_cues=[("but", "negative")],
        rule_trace=list(FULL_TRACE if trace is None else trace),
    )
    kwargs.update(overrides)
    return assemble_record(**kwargs)


def test_assemble_keeps_all_twelve_slots():
    record = build()
    assert set(record.codes) == set(CATEGORIES)
    assert record.codes["A"] == "A1"
    assert record.uncodable_reasons == {}


def test_assemble_uncodable_slot():
    slots = dict(FULL_SLOTS)
    slots["K"] = Uncodable("unmapped-venue")
    record = build(slots=slots)
    assert record.codes["K"] is None
    assert record.uncodable_reasons == {"K": "unmapped-venue"}
    assert record.value_or_bucket("K") == "uncodable"
    assert record.value_or_bucket("A") == "A1"


def test_assemble_missing_category():
    slots = dict(FULL_SLOTS)
    del slots["D"]
    with pytest.raises(IncompleteCoding) as err:
        build(slots=slots)
    assert "D" in str(err.value)


def test_assemble_extra_category():
    slots = dict(FULL_SLOTS)
    slots["Z"] = "Z1"
    with pytest.raises(IncompleteCoding) as err:
        build(slots=slots)
    assert "Z" in str(err.value)


def test_assemble_invalid_value():
    slots = dict(FULL_SLOTS)
    slots["E"] = "E9"
    with pytest.raises(IncompleteCoding):
        build(slots=slots)


def test_assemble_value_from_wrong_category():
    slots = dict(FULL_SLOTS)
    slots["E"] = "D1"
    with pytest.raises(IncompleteCoding):
        build(slots=slots)


def test_assemble_coded_value_requires_trace():
    trace = [t for t in FULL_TRACE if not t.startswith("J:")]
    with pytest.raises(IncompleteCoding) as err:
        build(trace=trace)
    assert "J" in str(err.value)


def test_assemble_uncodable_needs_no_trace():
    slots = dict(FULL_SLOTS)
    slots["K"] = Uncodable("unmapped-venue")
    trace = [t for t in FULL_TRACE if not t.startswith("K:")]
    record = build(slots=slots, trace=trace)
    assert record.codes["K"] is None


def test_json_line_key_order():
    line = record_to_json(build())
    keys = list(json.loads(line).keys())
    assert keys == [
        "doc_id", "citation_id", "ref_id", "link_status", "sentence_index",
        "context_level", "context_sentences",
        *CATEGORIES,
        "matched_cues", "rule_trace", "uncodable_reasons",
    ]
    assert line.startswith('{"doc_id": "doc-1", "citation_id": "c0001"')


def test_json_round_trip():
    record = build()
    again = record_from_json(record_to_json(record))
    assert again == record


def test_json_round_trip_with_uncodable():
    slots = dict(FULL_SLOTS)
    slots["A"] = Uncodable("unresolved-reference")
    record = build(slots=slots, ref_id=None, link_status="unresolved")
    again = record_from_json(record_to_json(record))
    assert again.codes["A"] is None
    assert again.uncodable_reasons == {"A": "unresolved-reference"}
    assert again == record


def _slot_strategy(category):
    values = [*VALUES[category], Uncodable("missing-authors")]
    return st.sampled_from(values)


record_strategy = st.fixed_dictionaries({cat: _slot_strategy(cat) for cat in CATEGORIES})


@given(slots=record_strategy, sentence_index=st.integers(min_value=0, max_value=500))
@settings(max_examples=150)
def test_round_trip_over_random_slots(slots, sentence_index):
    record = build(slots=slots, sentence_index=sentence_index)
    again = record_from_json(record_to_json(record))
    assert again == record
    # Serialization itself must be stable, not merely equal.
    assert record_to_json(again) == record_to_json(record)


def test_write_jsonl_sorts_and_terminates(tmp_path):
    records = [
        build(doc_id="zeta", citation_id="c0001"),
        build(doc_id="alpha", citation_id="c0002"),
        build(doc_id="alpha", citation_id="c0001"),
    ]
    path = tmp_path / "coded.jsonl"
    write_jsonl(records, path)
    text = path.read_text(encoding="utf-8")
    assert text.endswith("\n")
    lines = text.splitlines()
    assert [json.loads(l)["doc_id"] for l in lines] == ["alpha", "alpha", "zeta"]
    assert [json.loads(l)["citation_id"] for l in lines] == ["c0001", "c0002", "c0001"]


def test_write_jsonl_is_byte_deterministic(tmp_path):
    records = [build(citation_id=f"c{i:04d}") for i in range(5, 0, -1)]
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    write_jsonl(records, a)
    write_jsonl(list(reversed(records)), b)
    assert a.read_bytes() == b.read_bytes()


def test_write_jsonl_empty(tmp_path):
    path = tmp_path / "empty.jsonl"
    write_jsonl([], path)
    assert path.read_text(encoding="utf-8") == ""
    assert read_jsonl(path) == []


def test_read_jsonl_skips_blank_lines(tmp_path):
    record = build()
    path = tmp_path / "coded.jsonl"
    path.write_text(record_to_json(record) + "\n\n\n", encoding="utf-8")
    assert read_jsonl(path) == [record]


def test_sort_records_is_stable_key():
    records = [
        build(doc_id="b", citation_id="c0002"),
        build(doc_id="b", citation_id="c0001"),
        build(doc_id="a", citation_id="c0009"),
    ]
    ordered = sort_records(records)
    assert [(r.doc_id, r.citation_id) for r in ordered] == [
        ("a", "c0009"), ("b", "c0001"), ("b", "c0002"),
    ]
