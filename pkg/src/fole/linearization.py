"""Linearization of structures into quadruples, and the olog view.

``lin(M)`` holds one quadruple ``⟨(r, k), i, (s_i, t_i)⟩`` for every
classified key ``k ⊨_E r`` and every index ``i`` of ``σ(r)``.  Restricted to
the unified model (entity types and sorts coincide) the same data is a graph
of types with a set-valued instance: nodes are extents and each signature
slot is a function between extents.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import NamedTuple
from urllib.parse import quote

from .classification import Classification
from .errors import InconsistentQuads, NotUnifiedModel, ReferentialViolation
from .lists import IndexedList, SignatureMorphism, project_tuple
from .names import VALUE_INDEX
from .schema import Schema, Universe
from .structure import Structure, check_integrity, check_structure, require_valid


class LinQuad(NamedTuple):
    entity_type: str
    key: str
    index: str
    sort: str
    value: str


def linearize(m: Structure) -> frozenset[LinQuad]:
    require_valid(m)
    out = set()
    for r, k in m.ent.incidence:
        sig, tup = m.sigma(r), m.tau(k)
        for i in sig:
            quad = LinQuad(r, k, i, sig[i], tup[i])
            assert m.attr.holds(quad.value, quad.sort)
            out.add(quad)
    return frozenset(out)


def expected_quad_count(m: Structure) -> int:
    return sum(len(m.sigma(r)) for r, _ in m.ent.incidence)


@dataclass(frozen=True)
class Skeleton:
    """What a structure keeps outside its quadruples.

    Carriers, the attribute classification, and the incidence pairs of
    entity types with empty signature (these produce no quadruple).
    """

    entity_types: frozenset[str]
    keys: frozenset[str]
    attr: Classification
    nullary_incidence: frozenset[tuple[str, str]]


def skeleton(m: Structure) -> Skeleton:
    nullary = frozenset((r, k) for r, k in m.ent.incidence if not m.sigma(r))
    return Skeleton(m.ent.types, m.ent.instances, m.attr, nullary)


@dataclass(frozen=True)
class Delinearized:
    incidence: frozenset[tuple[str, str]]
    rows: Mapping[str, IndexedList]   # τ restricted to classified keys


def delinearize(quads: Iterable[LinQuad], schema: Schema, skel: Skeleton) -> Delinearized:
    """Rebuild the entity incidence and the classified rows from quadruples."""
    cells: dict[str, dict[str, str]] = {}
    seen: dict[tuple[str, str], set[str]] = {}
    for q in quads:
        if q.entity_type not in schema.entity_types or q.key not in skel.keys:
            raise InconsistentQuads(f"unknown entity {q.entity_type!r}/{q.key!r}")
        sig = schema.sigma(q.entity_type)
        if sig.get(q.index) != q.sort:
            raise InconsistentQuads(f"quad {tuple(q)} disagrees with the schema")
        if not skel.attr.holds(q.value, q.sort):
            raise InconsistentQuads(f"value {q.value!r} is not of sort {q.sort!r}")
        row = cells.setdefault(q.key, {})
        if row.setdefault(q.index, q.value) != q.value:
            raise InconsistentQuads(f"conflicting values for ({q.key!r}, {q.index!r})")
        seen.setdefault((q.entity_type, q.key), set()).add(q.index)
    for (r, k), indices in seen.items():
        if indices != set(schema.sigma(r)):
            raise InconsistentQuads(f"incomplete quads for ({r!r}, {k!r})")
    incidence = frozenset(seen) | skel.nullary_incidence
    rows = {k: IndexedList(cells.get(k, {})) for _, k in incidence}
    for r, k in incidence:
        if rows[k].arity != schema.sigma(r).arity:
            raise InconsistentQuads(f"key {k!r} has rows of different arity")
    return Delinearized(incidence, rows)


# -- exports ---------------------------------------------------------------

def _eav_escape(name: str) -> str:
    return name.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n").replace("\r", "\\r")


def export_eav(quads: Iterable[LinQuad]) -> bytes:
    """One tab-separated ``entityType key index sort value`` line per quad, sorted."""
    lines = ["\t".join(_eav_escape(x) for x in q) + "\n" for q in sorted(quads)]
    return "".join(lines).encode("utf-8")


NT_BASE = "urn:fole:"


def _iri(kind: str, *parts: str) -> str:
    return "<" + NT_BASE + kind + ":" + "#".join(quote(p, safe="") for p in parts) + ">"


def _nt_literal(value: str) -> str:
    escaped = (value.replace("\\", "\\\\").replace('"', '\\"')
               .replace("\n", "\\n").replace("\r", "\\r"))
    return f'"{escaped}"'


def export_ntriples(quads: Iterable[LinQuad], keys: Iterable[str] | None = None) -> bytes:
    """N-Triples: subject key, predicate ``r#i``, object key IRI or value literal.

    A value is written as a key IRI when it is one of ``keys`` (defaults to the
    keys occurring as subjects).
    """
    quads = list(quads)
    keys = {q.key for q in quads} if keys is None else set(keys)
    lines = set()
    for q in quads:
        obj = _iri("key", q.value) if q.value in keys else _nt_literal(q.value)
        lines.add(f"{_iri('key', q.key)} {_iri('attr', q.entity_type, q.index)} {obj} .\n")
    return "".join(sorted(lines)).encode("utf-8")


# -- olog view -------------------------------------------------------------

class OlogEdge(NamedTuple):
    source: str
    index: str   # the edge label is (source, index)
    target: str


@dataclass(frozen=True)
class OlogGraph:
    nodes: frozenset[str]
    edges: frozenset[OlogEdge]


@dataclass(frozen=True)
class OlogInstance:
    graph: OlogGraph
    node_sets: Mapping[str, frozenset[str]]
    edge_fns: Mapping[OlogEdge, Mapping[str, str]]

    def path_function(self, path: Iterable[OlogEdge]) -> dict[str, str]:
        """Composite of the edge functions along a path (must be non-empty)."""
        path = list(path)
        fn = dict(self.edge_fns[path[0]])
        for edge in path[1:]:
            step = self.edge_fns[edge]
            fn = {a: step[b] for a, b in fn.items()}
        return fn


def unified_model_problems(m: Structure) -> list[str]:
    r, x = m.schema.entity_types, m.schema.sorts
    out = [f"sort {s!r} is not an entity type" for s in sorted(x - r)]
    out += [f"entity type {t!r} is not a sort" for t in sorted(r - x)]
    return out


def olog_schema(m: Structure) -> OlogGraph:
    problems = unified_model_problems(m)
    if problems:
        offending = sorted(m.schema.entity_types ^ m.schema.sorts)
        raise NotUnifiedModel("; ".join(problems), offending)
    edges = frozenset(OlogEdge(r, i, s) for r in m.schema.entity_types for i, s in m.sigma(r).pairs)
    return OlogGraph(frozenset(m.schema.entity_types), edges)


def olog_instance(m: Structure) -> OlogInstance:
    graph = olog_schema(m)
    require_valid(m)
    ref = check_integrity(m).referential
    if not ref.ok:
        raise ReferentialViolation("values of shared types are not keys of those types",
                                   [v.names for v in ref.violations])
    node_sets = {r: m.ent.extent(r) for r in graph.nodes}
    edge_fns = {}
    for e in graph.edges:
        sig = m.sigma(e.source)
        slot = SignatureMorphism(IndexedList({e.index: e.target}), sig, {e.index: e.index})
        fn = {k: project_tuple(slot, m.tau(k), m.attr)[e.index] for k in node_sets[e.source]}
        stray = sorted(v for v in fn.values() if v not in node_sets[e.target])
        if stray:
            raise ReferentialViolation(f"edge {e} leaves the extent of {e.target!r}", stray)
        edge_fns[e] = fn
    return OlogInstance(graph, node_sets, edge_fns)


def unify(m: Structure) -> Structure:
    """Promote the model to the unified form ``E = A``.

    Every sort that is not an entity type becomes one, with signature
    ``(value: x)``; its values become keys describing themselves by the
    one-slot tuple ``(value: y)``.  Every entity type becomes a sort whose
    values are its keys.  Both classifications become the union of the old
    ones.  Raises ``ReferentialViolation`` when the result would violate the
    designation condition (e.g. a value of a shared type that is not a key).
    """
    require_valid(m)
    names = m.ent.types | m.attr.types
    insts = m.ent.instances | m.attr.instances
    incidence = m.ent.incidence | m.attr.incidence
    cls = Classification(names, insts, incidence)
    promoted = m.attr.types - m.ent.types
    signatures = dict(m.schema.signatures)
    signatures.update({x: IndexedList({VALUE_INDEX: x}) for x in promoted})
    tuples = {y: IndexedList({VALUE_INDEX: y}) for y in insts - m.ent.instances}
    tuples.update(m.universe.tuples)
    out = Structure(cls, cls, Schema(names, names, signatures), Universe(insts, insts, tuples))
    verdict = check_structure(out)
    if not verdict.ok:
        raise ReferentialViolation("model cannot be unified", [v.names for v in verdict.violations])
    return out
