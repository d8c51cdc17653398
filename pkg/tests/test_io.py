import json
from pathlib import Path

import pytest
from hypothesis import given

from fole.errors import ParseError, ValidationError
from fole.fixtures import TUPLES, company
from fole.interpretation import Table, tabular_interpretation
from fole.io import (
    MorphismDocument,
    dump_json,
    emit_csv,
    emit_dot,
    emit_model,
    emit_morphism_document,
    load_model,
    load_morphism,
    parse_model,
    parse_morphism_document,
    structure_morphism,
)
from fole.linearization import OlogEdge, OlogGraph
from fole.lists import IndexedList
from fole.structure import Structure, check_structure_morphism
from strategies import structures

DATA = Path(__file__).parent / "data"


class TestModelDocument:
    def test_fixture_file_round_trip(self):
        raw = (DATA / "company.fole").read_bytes()
        m = parse_model(raw)
        assert m == company()
        assert emit_model(m) == raw

    def test_empty_model(self):
        empty = Structure.build(entity_types=[], keys=[], ent_incidence=[], sorts=[], values=[],
                                attr_incidence=[], signatures={}, tuples={})
        raw = emit_model(empty)
        assert parse_model(raw) == empty
        assert emit_model(parse_model(raw)) == raw
        assert parse_model(b"{}") == empty

    @given(structures)
    def test_round_trip(self, m):
        raw = emit_model(m)
        assert parse_model(raw) == m
        assert emit_model(parse_model(raw)) == raw
        json.loads(raw)  # the canonical layout is plain JSON

    def test_malformed_position(self):
        with pytest.raises(ParseError) as info:
            parse_model((DATA / "malformed.fole").read_bytes())
        assert info.value.line > 0
        assert "line" in str(info.value)

    @pytest.mark.parametrize("doc", [
        b"[]",
        b'{"keys": "k"}',
        b'{"keys": ["k", "k"]}',
        b'{"nonsense": []}',
        b'{"keys": [], "keys": []}',
        b'{"entIncidence": [["r"]]}',
        b'{"signatures": {"r": [{"index": "a"}]}}',
        b'{"tuples": {"k": [{"index": "a", "value": "x"}, {"index": "a", "value": "y"}]}}',
        '{"keys": ["⟐self"]}'.encode(),
        b'{"keys": ["E:k"]}',
        b"\xff",
    ])
    def test_parse_errors(self, doc):
        with pytest.raises(ParseError):
            parse_model(doc)

    def test_reserved_names_allowed_on_request(self):
        assert parse_model(b'{"keys": ["E:k"], "tuples": {"E:k": []}}', allow_reserved=True)

    def test_dangling_pair(self):
        with pytest.raises(ValidationError):
            parse_model((DATA / "company_dangling.fole").read_bytes())

    def test_missing_tuple(self):
        with pytest.raises(ValidationError):
            parse_model(b'{"keys": ["k"]}')

    def test_designation_checked_on_request(self):
        raw = (DATA / "company_arity_drop.fole").read_bytes()
        assert parse_model(raw)  # carriers agree
        with pytest.raises(ValidationError):
            parse_model(raw, check=True)


class TestMorphismDocument:
    def test_round_trip(self):
        raw = (DATA / "renaming.json").read_bytes()
        doc = parse_morphism_document(raw)
        assert emit_morphism_document(doc) == raw

    def test_load_relative_refs(self):
        doc, src, tgt = load_morphism(DATA / "renaming.json")
        assert tgt == load_model(DATA / "company.fole")
        assert check_structure_morphism(structure_morphism(doc, src, tgt)).ok

    def test_partial_document(self):
        doc, src, tgt = load_morphism(DATA / "partial.json")
        assert doc.maps["g"] is None
        with pytest.raises(ParseError):
            structure_morphism(doc, src, tgt)

    @pytest.mark.parametrize("doc", [
        b'{"targetRef": "m"}',
        b'{"sourceRef": "a", "targetRef": "b", "r": [["x", "y"], ["x", "z"]]}',
        b'{"sourceRef": "a", "targetRef": "b", "h": []}',
    ])
    def test_parse_errors(self, doc):
        with pytest.raises(ParseError):
            parse_morphism_document(doc)

    def test_emit_skips_absent_maps(self):
        doc = MorphismDocument("a", "b", {"r": {"x": "y"}, "k": None, "f": None, "g": None})
        assert json.loads(emit_morphism_document(doc)) == {"sourceRef": "a", "targetRef": "b", "r": [["x", "y"]]}


class TestEmitters:
    def test_csv_quoting(self):
        table = Table(IndexedList({"a": "s", "b": "s"}), {"k": IndexedList({"a": "x,y", "b": 'say "hi"'})})
        assert emit_csv(table) == b'a,b\r\n"x,y","say ""hi"""\r\n'

    def test_csv_header_only(self):
        assert emit_csv(Table(IndexedList({"b": "s", "a": "s"}), {})) == b"a,b\r\n"

    def test_csv_rows_in_key_order(self):
        m = company(tuples=dict(TUPLES, e0=TUPLES["e1"]),
                    entity_extents={"Emp": ["e1", "e0"], "Dept": ["d1"], "Proj": ["p1"], "Act": ["a1"]})
        lines = emit_csv(tabular_interpretation(m, "Emp")).decode().split("\r\n")
        assert lines[1] == lines[2] == "d1,7,Alice"

    def test_dot_escaping(self):
        graph = OlogGraph(frozenset({'a"b'}), frozenset({OlogEdge('a"b', "i", 'a"b')}))
        assert emit_dot(graph) == b'digraph olog {\n  "a\\"b";\n  "a\\"b" -> "a\\"b" [label="i"];\n}\n'

    def test_dump_json_pairs(self):
        assert dump_json({"m": [["x", "y"]]}) == b'{\n  "m": [\n    ["x", "y"]\n  ]\n}\n'
