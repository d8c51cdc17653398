"""Schemas (type hypergraphs) and universes (instance hypergraphs).

A schema ``⟨R, σ, X⟩`` assigns every entity type a signature over the sorts.
A universe ``⟨K, τ, Y⟩`` assigns every key a tuple over the values; values
carry no typing of their own until a structure classifies them.

Schema morphisms point forward (``S2 ⇒ S1`` with ``r: R2 -> R1``,
``f: X2 -> X1``); universe morphisms point backward (``U2 ⇐ U1`` with
``k: K1 -> K2``, ``g: Y1 -> Y2``).  Both keep ``source`` as the index-2 side.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from . import _maps
from .errors import EndpointMismatch, PartialMap
from .lists import IndexedList, sum_along
from .verdict import Verdict, Violation


def _lists(m: Mapping[str, IndexedList | Mapping[str, str]]) -> dict[str, IndexedList]:
    return {k: v if isinstance(v, IndexedList) else IndexedList(v) for k, v in m.items()}


@dataclass(frozen=True)
class Schema:
    entity_types: frozenset[str]
    sorts: frozenset[str]
    signatures: Mapping[str, IndexedList]

    def __init__(self, entity_types: Iterable[str], sorts: Iterable[str],
                 signatures: Mapping[str, IndexedList | Mapping[str, str]]):
        object.__setattr__(self, "entity_types", frozenset(entity_types))
        object.__setattr__(self, "sorts", frozenset(sorts))
        object.__setattr__(self, "signatures", _lists(signatures))

    def sigma(self, r: str) -> IndexedList:
        return self.signatures[r]

    def arity(self, r: str) -> frozenset[str]:
        return self.signatures[r].arity

    def __hash__(self):
        return hash((self.entity_types, self.sorts, frozenset(self.signatures.items())))


@dataclass(frozen=True)
class Universe:
    keys: frozenset[str]
    values: frozenset[str]
    tuples: Mapping[str, IndexedList]

    def __init__(self, keys: Iterable[str], values: Iterable[str],
                 tuples: Mapping[str, IndexedList | Mapping[str, str]]):
        object.__setattr__(self, "keys", frozenset(keys))
        object.__setattr__(self, "values", frozenset(values))
        object.__setattr__(self, "tuples", _lists(tuples))

    def tau(self, k: str) -> IndexedList:
        return self.tuples[k]

    def __hash__(self):
        return hash((self.keys, self.values, frozenset(self.tuples.items())))


def schema_wellformedness(s: Schema) -> Verdict:
    """σ total on R and every signature sort in X.

    Violations: ``("schema.total", (r,))`` and ``("schema.sort", (r, i))``.
    """
    bad = [Violation("schema.total", (r,)) for r in s.entity_types - s.signatures.keys()]
    bad += [Violation("schema.extra", (r,)) for r in s.signatures.keys() - s.entity_types]
    for r, sig in s.signatures.items():
        bad += [Violation("schema.sort", (r, i)) for i, x in sig.pairs if x not in s.sorts]
    return Verdict(tuple(bad))


def universe_wellformedness(u: Universe) -> Verdict:
    """τ total on K and every tuple value in Y (same violation shapes as schemas)."""
    bad = [Violation("universe.total", (k,)) for k in u.keys - u.tuples.keys()]
    bad += [Violation("universe.extra", (k,)) for k in u.tuples.keys() - u.keys]
    for k, tup in u.tuples.items():
        bad += [Violation("universe.value", (k, i)) for i, y in tup.pairs if y not in u.values]
    return Verdict(tuple(bad))


@dataclass(frozen=True)
class SchemaMorphism:
    source: Schema
    target: Schema
    ent_map: Mapping[str, str]   # r: R2 -> R1
    sort_map: Mapping[str, str]  # f: X2 -> X1

    def __post_init__(self):
        object.__setattr__(self, "ent_map", dict(self.ent_map))
        object.__setattr__(self, "sort_map", dict(self.sort_map))

    def require_total(self) -> None:
        _maps.require_total(self.ent_map, self.source.entity_types, self.target.entity_types,
                            what="entity-type map", exc=PartialMap)
        _maps.require_total(self.sort_map, self.source.sorts, self.target.sorts,
                            what="sort map", exc=PartialMap)


@dataclass(frozen=True)
class UniverseMorphism:
    source: Universe             # U2
    target: Universe             # U1
    key_map: Mapping[str, str]   # k: K1 -> K2
    val_map: Mapping[str, str]   # g: Y1 -> Y2

    def __post_init__(self):
        object.__setattr__(self, "key_map", dict(self.key_map))
        object.__setattr__(self, "val_map", dict(self.val_map))

    def require_total(self) -> None:
        _maps.require_total(self.key_map, self.target.keys, self.source.keys,
                            what="key map", exc=PartialMap)
        _maps.require_total(self.val_map, self.target.values, self.source.values,
                            what="value map", exc=PartialMap)


def check_schema_morphism(m: SchemaMorphism, law: str = "schema") -> Verdict:
    """``r·σ1 = σ2·Σ_f``; violations carry ``names = (r2,)``."""
    m.require_total()
    bad = []
    for r2 in m.source.entity_types:
        expected = sum_along(m.sort_map, m.source.sigma(r2))
        if m.target.sigma(m.ent_map[r2]) != expected:
            bad.append(Violation(law, (r2,)))
    return Verdict(tuple(bad))


def check_universe_morphism(m: UniverseMorphism, law: str = "universe") -> Verdict:
    """``k·τ2 = τ1·Σ_g``; violations carry ``names = (k1,)``."""
    m.require_total()
    bad = []
    for k1 in m.target.keys:
        expected = sum_along(m.val_map, m.target.tau(k1))
        if m.source.tau(m.key_map[k1]) != expected:
            bad.append(Violation(law, (k1,)))
    return Verdict(tuple(bad))


def identity_schema_morphism(s: Schema) -> SchemaMorphism:
    return SchemaMorphism(s, s, _maps.identity(s.entity_types), _maps.identity(s.sorts))


def identity_universe_morphism(u: Universe) -> UniverseMorphism:
    return UniverseMorphism(u, u, _maps.identity(u.keys), _maps.identity(u.values))


def compose_schema_morphisms(m: SchemaMorphism, n: SchemaMorphism) -> SchemaMorphism:
    """``S3 ⇒ S2`` then ``S2 ⇒ S1``."""
    if m.target != n.source:
        raise EndpointMismatch("middle schemas differ")
    return SchemaMorphism(m.source, n.target,
                          _maps.compose(m.ent_map, n.ent_map),
                          _maps.compose(m.sort_map, n.sort_map))


def compose_universe_morphisms(m: UniverseMorphism, n: UniverseMorphism) -> UniverseMorphism:
    """``U3 ⇐ U2`` then ``U2 ⇐ U1``, giving ``U3 ⇐ U1``."""
    if m.target != n.source:
        raise EndpointMismatch("middle universes differ")
    return UniverseMorphism(m.source, n.target,
                            _maps.compose(n.key_map, m.key_map),
                            _maps.compose(n.val_map, m.val_map))
