"""Model and morphism documents, plus CSV and DOT emitters.

A model document is a JSON object::

    {
      "attrIncidence": [["Str", "Alice"], ...],      # (sort, value)
      "entIncidence":  [["Emp", "e1"], ...],         # (entity type, key)
      "entityTypes":   ["Act", "Dept", ...],
      "keys":          ["a1", "d1", ...],
      "signatures":    {"Emp": [{"index": "dept", "sort": "Dept"}, ...]},
      "sorts":         ["Date", "Dept", ...],
      "tuples":        {"e1": [{"index": "dept", "value": "d1"}, ...]},
      "values":        ["2013-01-01", "7", ...]
    }

The canonical encoding sorts every name array, pair array and index list,
puts one pair or list entry per line and ends with a newline; ``emit_model`` always
produces it, so ``emit_model(parse_model(doc)) == doc`` for canonical input.

A morphism document names its endpoints by path (relative to the document)
and lists each map as ``[from, to]`` pairs::

    {"sourceRef": "m2.fole", "targetRef": "m1.fole",
     "r": [...], "k": [...], "f": [...], "g": [...]}
"""

from __future__ import annotations

import csv
import io
import json
import re
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, ValidationError
from .interpretation import Table
from .linearization import OlogGraph
from .lists import IndexedList
from .names import SELF_INDEX, is_reserved, untag
from .structure import Structure, StructureMorphism, carrier_mismatches, check_structure

NAME_FIELDS = ("entityTypes", "keys", "sorts", "values")
MODEL_FIELDS = NAME_FIELDS + ("entIncidence", "attrIncidence", "signatures", "tuples")
MAP_FIELDS = ("r", "k", "f", "g")


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ParseError(f"duplicate field {key!r}")
        out[key] = value
    return out


def _load_json(data: str | bytes) -> object:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(f"not UTF-8: {err.reason}", 0, err.start) from None
    try:
        return json.loads(data, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, err.lineno, err.colno) from None


_STRING = r'"(?:[^"\\]|\\.)*"'
_SPREAD_PAIR = re.compile(r"\[\n\s*(" + _STRING + r"),\n\s*(" + _STRING + r")\n\s*\]")


def dump_json(obj) -> bytes:
    """Indented, key-sorted JSON with ``[name, name]`` pairs kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True)
    return (_SPREAD_PAIR.sub(r"[\1, \2]", text) + "\n").encode("utf-8")


def _names(doc: dict, field: str) -> list[str]:
    value = doc.get(field, [])
    if not isinstance(value, list) or not all(isinstance(n, str) for n in value):
        raise ParseError(f"{field!r} must be an array of strings")
    if len(set(value)) != len(value):
        raise ParseError(f"{field!r} lists a name twice")
    return value


def _pairs(doc: dict, field: str) -> list[tuple[str, str]]:
    value = doc.get(field, [])
    ok = isinstance(value, list) and all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(n, str) for n in p) for p in value)
    if not ok:
        raise ParseError(f"{field!r} must be an array of [name, name] pairs")
    return [tuple(p) for p in value]


def _lists(doc: dict, field: str, slot: str) -> dict[str, dict[str, str]]:
    value = doc.get(field, {})
    if not isinstance(value, dict):
        raise ParseError(f"{field!r} must be an object")
    out = {}
    for owner, entries in value.items():
        ok = isinstance(entries, list) and all(
            isinstance(e, dict) and set(e) == {"index", slot}
            and isinstance(e["index"], str) and isinstance(e[slot], str) for e in entries)
        if not ok:
            raise ParseError(f"{field}[{owner!r}] must be an array of {{index, {slot}}} objects")
        lst = {e["index"]: e[slot] for e in entries}
        if len(lst) != len(entries):
            raise ParseError(f"{field}[{owner!r}] repeats an index")
        out[owner] = lst
    return out


def parse_model(data: str | bytes, *, check: bool = False, allow_reserved: bool = False) -> Structure:
    """Parse a model document.

    Raises ``ParseError`` for malformed documents (including reserved names
    unless ``allow_reserved``) and ``ValidationError`` when the document's
    parts do not share carriers.  With ``check`` the designation condition
    must hold as well.
    """
    doc = _load_json(data)
    if not isinstance(doc, dict):
        raise ParseError("model document must be a JSON object", 1, 1)
    unknown = sorted(set(doc) - set(MODEL_FIELDS))
    if unknown:
        raise ParseError(f"unknown fields {unknown}")
    names = {f: _names(doc, f) for f in NAME_FIELDS}
    ent_inc = _pairs(doc, "entIncidence")
    attr_inc = _pairs(doc, "attrIncidence")
    sigs = _lists(doc, "signatures", "sort")
    tups = _lists(doc, "tuples", "value")
    if not allow_reserved:
        used = [n for ns in names.values() for n in ns]
        used += [i for lst in list(sigs.values()) + list(tups.values()) for i in lst]
        reserved = sorted({n for n in used if is_reserved(n)})
        if reserved:
            raise ParseError(f"reserved names in input: {reserved}")

    r, k, x, y = (set(names[f]) for f in NAME_FIELDS)
    problems = [f"entIncidence pair {p} outside the carriers" for p in ent_inc
                if p[0] not in r or p[1] not in k]
    problems += [f"attrIncidence pair {p} outside the carriers" for p in attr_inc
                 if p[0] not in x or p[1] not in y]
    if problems:
        raise ValidationError("; ".join(problems))
    m = Structure.build(entity_types=r, keys=k, ent_incidence=ent_inc,
                        sorts=x, values=y, attr_incidence=attr_inc,
                        signatures=sigs, tuples=tups)
    problems = carrier_mismatches(m)
    if problems:
        raise ValidationError("; ".join(problems))
    if check:
        verdict = check_structure(m)
        if not verdict.ok:
            raise ValidationError(f"designation fails at {[v.names for v in verdict.violations]}")
    return m


def _compact(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def _dump_model(doc: dict) -> bytes:
    """Canonical layout: one name array per line, one pair or list entry per line."""
    parts = []
    for field in sorted(doc):
        value = doc[field]
        if field in NAME_FIELDS:
            body = _compact(value)
        elif isinstance(value, list):
            body = "[" + ",".join(f"\n    {_compact(p)}" for p in value) + ("\n  ]" if value else "]")
        else:
            entries = []
            for owner in sorted(value):
                items = ",".join(f"\n      {_compact(e)}" for e in value[owner])
                entries.append(f"\n    {_compact(owner)}: [" + items + ("\n    ]" if value[owner] else "]"))
            body = "{" + ",".join(entries) + ("\n  }" if entries else "}")
        parts.append(f"  {_compact(field)}: {body}")
    return ("{\n" + ",\n".join(parts) + "\n}\n").encode("utf-8")


def model_document(m: Structure) -> dict:
    return {
        "entityTypes": sorted(m.ent.types),
        "keys": sorted(m.ent.instances),
        "sorts": sorted(m.attr.types),
        "values": sorted(m.attr.instances),
        "entIncidence": [list(p) for p in sorted(m.ent.incidence)],
        "attrIncidence": [list(p) for p in sorted(m.attr.incidence)],
        "signatures": {r: [{"index": i, "sort": s} for i, s in sig.pairs]
                       for r, sig in sorted(m.schema.signatures.items())},
        "tuples": {k: [{"index": i, "value": v} for i, v in tup.pairs]
                   for k, tup in sorted(m.universe.tuples.items())},
    }


def emit_model(m: Structure) -> bytes:
    return _dump_model(model_document(m))


def load_model(path: str | Path, **kwargs) -> Structure:
    return parse_model(Path(path).read_bytes(), **kwargs)


# -- morphism documents ---------------------------------------------------------

@dataclass(frozen=True)
class MorphismDocument:
    source_ref: str
    target_ref: str
    maps: Mapping[str, dict[str, str] | None]  # r, k, f, g; None when absent


def parse_morphism_document(data: str | bytes) -> MorphismDocument:
    doc = _load_json(data)
    if not isinstance(doc, dict):
        raise ParseError("morphism document must be a JSON object", 1, 1)
    unknown = sorted(set(doc) - {"sourceRef", "targetRef", *MAP_FIELDS})
    if unknown:
        raise ParseError(f"unknown fields {unknown}")
    refs = []
    for field in ("sourceRef", "targetRef"):
        if not isinstance(doc.get(field), str):
            raise ParseError(f"{field!r} must be a path string")
        refs.append(doc[field])
    maps = {}
    for field in MAP_FIELDS:
        if field not in doc:
            maps[field] = None
            continue
        pairs = _pairs(doc, field)
        fn = dict(pairs)
        if len(fn) != len(pairs):
            raise ParseError(f"map {field!r} lists an argument twice")
        maps[field] = fn
    return MorphismDocument(refs[0], refs[1], maps)


def emit_morphism_document(doc: MorphismDocument) -> bytes:
    out = {"sourceRef": doc.source_ref, "targetRef": doc.target_ref}
    for field in MAP_FIELDS:
        if doc.maps.get(field) is not None:
            out[field] = [list(p) for p in sorted(doc.maps[field].items())]
    return dump_json(out)


def load_morphism(path: str | Path, **kwargs) -> tuple[MorphismDocument, Structure, Structure]:
    """Read a morphism document and both endpoint models."""
    path = Path(path)
    doc = parse_morphism_document(path.read_bytes())
    source = load_model(path.parent / doc.source_ref, **kwargs)
    target = load_model(path.parent / doc.target_ref, **kwargs)
    return doc, source, target


def structure_morphism(doc: MorphismDocument, source: Structure, target: Structure) -> StructureMorphism:
    missing = [f for f in MAP_FIELDS if doc.maps[f] is None]
    if missing:
        raise ParseError(f"morphism document lacks maps {missing}")
    return StructureMorphism(source, target, **{f: doc.maps[f] for f in MAP_FIELDS})


def morphism_maps(phi: StructureMorphism) -> dict:
    return {name: [list(p) for p in sorted(fn.items())]
            for name, fn in zip(MAP_FIELDS, phi.components())}


# -- emitters -------------------------------------------------------------------

def table_columns(signature: IndexedList) -> list[str]:
    """Canonical column order: index names sorted, the self column first."""
    cols = sorted(i for i in signature if i != SELF_INDEX)
    return ([SELF_INDEX] if SELF_INDEX in signature else []) + cols


def emit_csv(table: Table) -> bytes:
    """RFC 4180 CSV (CRLF line ends); header of index names, one row per key in key order.

    Tags added by the key embedding are erased from cell values.
    """
    cols = table_columns(table.signature)
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(cols)
    for key in sorted(table.rows):
        row = table.rows[key]
        writer.writerow([untag(row[c]) for c in cols])
    return buf.getvalue().encode("utf-8")


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(graph: OlogGraph) -> bytes:
    lines = ["digraph olog {"]
    lines += [f"  {_dot_id(n)};" for n in sorted(graph.nodes)]
    lines += [f"  {_dot_id(e.source)} -> {_dot_id(e.target)} [label={_dot_id(e.index)}];"
              for e in sorted(graph.edges)]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
