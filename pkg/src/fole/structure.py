"""Structures: the full entity-relationship-attribute model of one community.

A structure joins an entity classification ``E = ⟨R, K, ⊨_E⟩`` and an
attribute classification ``A = ⟨X, Y, ⊨_A⟩`` through a schema ``⟨R, σ, X⟩``
and a universe ``⟨K, τ, Y⟩``.  Its one defining condition (the list
designation) is that every classified key's tuple is classified by its
type's signature::

    k ⊨_E r   implies   τ(k) ⊨_List(A) σ(r)

Entity and attribute names may overlap; a name in ``R ∩ X`` is both an entity
type and a sort, which is how foreign keys are expressed.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from . import _maps
from .classification import (
    Classification,
    Infomorphism,
    check_infomorphism,
    parallel_sum,
    sum_maps,
)
from .errors import CarrierMismatch, EndpointMismatch, InvalidEndpoint, InvalidMorphism, InvalidStructure
from .lists import IndexedList, tuple_violations
from .names import SELF_INDEX, tag_attribute, tag_entity
from .schema import (
    Schema,
    SchemaMorphism,
    Universe,
    UniverseMorphism,
    check_schema_morphism,
    check_universe_morphism,
    schema_wellformedness,
    universe_wellformedness,
)
from .verdict import Verdict, Violation


@dataclass(frozen=True)
class Structure:
    ent: Classification
    attr: Classification
    schema: Schema
    universe: Universe

    @classmethod
    def build(
        cls,
        *,
        entity_types: Iterable[str],
        keys: Iterable[str],
        ent_incidence: Iterable[tuple[str, str]],
        sorts: Iterable[str],
        values: Iterable[str],
        attr_incidence: Iterable[tuple[str, str]],
        signatures: Mapping[str, Mapping[str, str]],
        tuples: Mapping[str, Mapping[str, str]],
    ) -> "Structure":
        entity_types, keys, sorts, values = map(frozenset, (entity_types, keys, sorts, values))
        return cls(
            Classification(entity_types, keys, ent_incidence),
            Classification(sorts, values, attr_incidence),
            Schema(entity_types, sorts, signatures),
            Universe(keys, values, tuples),
        )

    def sigma(self, r: str) -> IndexedList:
        return self.schema.sigma(r)

    def tau(self, k: str) -> IndexedList:
        return self.universe.tau(k)

    @property
    def shared_types(self) -> frozenset[str]:
        """``R ∩ X``: names that are both entity types and sorts."""
        return self.ent.types & self.attr.types

    def __hash__(self):
        return hash((self.ent, self.attr, self.schema, self.universe))


def carrier_mismatches(m: Structure) -> list[str]:
    out = []
    if m.ent.types != m.schema.entity_types:
        out.append("entity types of E and S differ")
    if m.ent.instances != m.universe.keys:
        out.append("keys of E and U differ")
    if m.attr.types != m.schema.sorts:
        out.append("sorts of A and S differ")
    if m.attr.instances != m.universe.values:
        out.append("values of A and U differ")
    out += [f"{v.law} {v.names}" for v in schema_wellformedness(m.schema).violations]
    out += [f"{v.law} {v.names}" for v in universe_wellformedness(m.universe).violations]
    return out


def check_structure(m: Structure) -> Verdict:
    """Exhaustive designation check.

    Violations carry ``names = (r, k, index)`` with detail ``arity`` (index
    present on one side only) or ``sort`` (value not of the indexed sort).
    Raises ``CarrierMismatch`` when the four components do not share carriers.
    """
    problems = carrier_mismatches(m)
    if problems:
        raise CarrierMismatch("; ".join(problems))
    bad = []
    for r, k in m.ent.incidence:
        for i, reason in tuple_violations(m.attr, m.sigma(r), m.tau(k)):
            bad.append(Violation("designation", (r, k, i), reason))
    return Verdict(tuple(bad))


def require_valid(m: Structure, exc: type[InvalidStructure] = InvalidStructure) -> None:
    try:
        verdict = check_structure(m)
    except CarrierMismatch as err:
        raise exc(str(err)) from err
    if not verdict.ok:
        raise exc(f"structure fails the designation condition at "
                  f"{[v.names for v in verdict.violations]}", verdict)


@dataclass(frozen=True)
class StructureMorphism:
    """``M2 ⇄ M1`` given by ``⟨r, k, f, g⟩``.

    ``r: R2 -> R1`` and ``f: X2 -> X1`` run forward; ``k: K1 -> K2`` and
    ``g: Y1 -> Y2`` run backward.
    """

    source: Structure
    target: Structure
    r: Mapping[str, str]
    k: Mapping[str, str]
    f: Mapping[str, str]
    g: Mapping[str, str]

    def __post_init__(self):
        for name in ("r", "k", "f", "g"):
            object.__setattr__(self, name, dict(getattr(self, name)))

    def schema_morphism(self) -> SchemaMorphism:
        return SchemaMorphism(self.source.schema, self.target.schema, self.r, self.f)

    def universe_morphism(self) -> UniverseMorphism:
        return UniverseMorphism(self.source.universe, self.target.universe, self.k, self.g)

    def entity_infomorphism(self) -> Infomorphism:
        return Infomorphism(self.source.ent, self.target.ent, self.r, self.k)

    def attribute_infomorphism(self) -> Infomorphism:
        return Infomorphism(self.source.attr, self.target.attr, self.f, self.g)

    def components(self) -> tuple[dict, dict, dict, dict]:
        return (dict(self.r), dict(self.k), dict(self.f), dict(self.g))


def identity_structure_morphism(m: Structure) -> StructureMorphism:
    return StructureMorphism(m, m,
                             _maps.identity(m.ent.types), _maps.identity(m.ent.instances),
                             _maps.identity(m.attr.types), _maps.identity(m.attr.instances))


def compose_structure_morphisms(first: StructureMorphism, then: StructureMorphism) -> StructureMorphism:
    """``M3 ⇄ M2`` then ``M2 ⇄ M1``; componentwise."""
    if first.target != then.source:
        raise EndpointMismatch("middle structures differ")
    return StructureMorphism(
        first.source, then.target,
        r=_maps.compose(first.r, then.r),
        k=_maps.compose(then.k, first.k),
        f=_maps.compose(first.f, then.f),
        g=_maps.compose(then.g, first.g),
    )


def check_structure_morphism(phi: StructureMorphism) -> Verdict:
    """Check the four component laws exhaustively.

    Laws: ``schema`` (names ``(r2,)``), ``universe`` (``(k1,)``), ``entity``
    (``(r2, k1)``) and ``attribute`` (``(x2, y1)``).  Both endpoints must
    be valid structures (``InvalidEndpoint`` otherwise); partial maps raise
    ``PartialMap``/``DomainMismatch``.
    """
    require_valid(phi.source, InvalidEndpoint)
    require_valid(phi.target, InvalidEndpoint)
    return Verdict.merge(
        check_schema_morphism(phi.schema_morphism(), law="schema"),
        check_universe_morphism(phi.universe_morphism(), law="universe"),
        check_infomorphism(phi.entity_infomorphism(), law="entity"),
        check_infomorphism(phi.attribute_infomorphism(), law="attribute"),
    )


def require_valid_morphism(phi: StructureMorphism) -> None:
    verdict = check_structure_morphism(phi)
    if not verdict.ok:
        raise InvalidMorphism(f"structure morphism violates {verdict.laws()}", verdict)


# -- key embedding -----------------------------------------------------------

def embed_signature(r: str, sig: IndexedList) -> IndexedList:
    """``⟨1, r⟩ + ⟨I, s⟩`` over the tagged sum ``R + X``."""
    return IndexedList([(SELF_INDEX, tag_entity(r))] + [(i, tag_attribute(s)) for i, s in sig.pairs])


def embed_tuple(k: str, tup: IndexedList) -> IndexedList:
    """``⟨1, k⟩ + ⟨I, t⟩`` over the tagged sum ``K + Y``."""
    return IndexedList([(SELF_INDEX, tag_entity(k))] + [(i, tag_attribute(t)) for i, t in tup.pairs])


def key_embed(m: Structure) -> Structure:
    """Companion structure in which every tuple carries its own key.

    The typed domain becomes the parallel sum ``E + A``; each signature gains
    the index ``⟐self`` of sort ``E:r`` and each tuple the index ``⟐self``
    with value ``E:k``.  Everything else is tagged ``A:``.
    """
    require_valid(m)
    attr = parallel_sum(m.ent, m.attr)
    schema = Schema(m.schema.entity_types, attr.types,
                    {r: embed_signature(r, m.sigma(r)) for r in m.schema.entity_types})
    universe = Universe(m.universe.keys, attr.instances,
                        {k: embed_tuple(k, m.tau(k)) for k in m.universe.keys})
    return Structure(m.ent, attr, schema, universe)


def key_embed_morphism(phi: StructureMorphism) -> StructureMorphism:
    """Lift ``⟨r, k, f, g⟩`` to ``⟨r, k, r+f, k+g⟩`` between the key embeddings."""
    require_valid_morphism(phi)
    return StructureMorphism(
        key_embed(phi.source), key_embed(phi.target),
        r=phi.r, k=phi.k,
        f=sum_maps(phi.r, phi.f),
        g=sum_maps(phi.k, phi.g),
    )


# -- constraints ---------------------------------------------------------------

@dataclass(frozen=True)
class IntegrityReport:
    entity: Verdict
    domain: Verdict
    referential: Verdict

    @property
    def ok(self) -> bool:
        return self.entity.ok and self.domain.ok and self.referential.ok

    def to_json(self) -> dict:
        return {
            "verdict": "ok" if self.ok else "violation",
            "entity": self.entity.to_json(),
            "domain": self.domain.to_json(),
            "referential": self.referential.to_json(),
        }


def check_integrity(m: Structure) -> IntegrityReport:
    """Report entity, domain and referential integrity without raising.

    * entity: the universe is well formed (every key has a tuple, every
      tuple value is a declared value);
    * domain: the schema is well formed and the designation condition holds;
    * referential: for every shared name ``t ∈ R ∩ X``, every value of sort
      ``t`` is a key of type ``t``.  Violations carry ``(t, y)``.
    """
    entity = universe_wellformedness(m.universe)
    domain = schema_wellformedness(m.schema)
    try:
        designation = check_structure(m)
    except CarrierMismatch as err:
        designation = Verdict((Violation("carrier", (), str(err)),))
    domain = Verdict.merge(domain, designation)
    bad = []
    for t in m.shared_types:
        for y in m.attr.extent(t):
            if not m.ent.holds(y, t):
                bad.append(Violation("referential", (t, y)))
    return IntegrityReport(entity, domain, Verdict(tuple(bad)))


def check_overlap_coherence(m: Structure) -> Verdict:
    """Every instance of a shared type lies in ``K ∩ Y``; violations carry ``(t, name)``."""
    overlap = m.ent.instances & m.attr.instances
    bad = []
    for t in m.shared_types:
        for y in (m.ent.extent(t) | m.attr.extent(t)) - overlap:
            bad.append(Violation("overlap", (t, y)))
    return Verdict(tuple(bad))


# -- extensiveness ---------------------------------------------------------------

def tuple_preimage(m: Structure, tuples: Iterable[IndexedList]) -> frozenset[str]:
    """``τ⁻¹(tuples)`` over all keys."""
    tuples = set(tuples)
    return frozenset(k for k, t in m.universe.tuples.items() if t in tuples)


def interpreted_tuples(m: Structure, r: str) -> frozenset[IndexedList]:
    """``℘τ(ext_E(r))``, the direct image of the extent."""
    return frozenset(m.tau(k) for k in m.ent.extent(r))


def non_extensive_types(m: Structure) -> list[str]:
    return sorted(r for r in m.ent.types
                  if tuple_preimage(m, interpreted_tuples(m, r)) != m.ent.extent(r))


def is_extensive(m: Structure) -> bool:
    """Every entity extent equals the full τ-preimage of its interpreted relation."""
    require_valid(m)
    return not non_extensive_types(m)
