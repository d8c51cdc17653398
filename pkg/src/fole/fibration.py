"""Fiber passages of structures along schema and universe morphisms.

Along a schema morphism ``⟨r, f⟩: S2 ⇒ S1`` a structure over ``S1`` pulls
back to its reduct over ``S2`` (same universe).  Along a universe morphism
``⟨k, g⟩: U2 ⇐ U1`` a structure over ``U2`` pulls back to a structure over
``U1`` (same schema).  Each passage comes with a bridge morphism, and any
structure morphism factors through either passage; both routes meet at the
same midpoint structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import _maps
from .classification import inverse_image_by_instances, inverse_image_by_types
from .errors import DomainMismatch, FoleError, InvalidInput, InvalidMorphism
from .schema import (
    SchemaMorphism,
    UniverseMorphism,
    check_schema_morphism,
    check_universe_morphism,
)
from .structure import (
    Structure,
    StructureMorphism,
    check_structure,
    check_structure_morphism,
    compose_structure_morphisms,
)
from .verdict import Verdict, Violation


def _require_structure(m: Structure) -> None:
    try:
        ok = check_structure(m).ok
    except FoleError as err:
        raise InvalidInput(f"invalid structure: {err}") from err
    if not ok:
        raise InvalidInput("structure fails the designation condition")


def _require_morphism(verdict_fn, m) -> None:
    try:
        ok = verdict_fn(m).ok
    except DomainMismatch as err:
        raise InvalidInput(str(err)) from err
    if not ok:
        raise InvalidInput("morphism violates its defining condition")


def reduct_along_schema(m1: Structure, m: SchemaMorphism) -> Structure:
    """The reduct ``⟨r⁻¹(E1), ⟨σ2, τ1⟩, f⁻¹(A1)⟩`` over the source schema."""
    if m.target != m1.schema:
        raise InvalidInput("schema morphism does not land in the structure's schema")
    _require_structure(m1)
    _require_morphism(check_schema_morphism, m)
    ent = inverse_image_by_types(m.ent_map, m1.ent, m.source.entity_types)
    attr = inverse_image_by_types(m.sort_map, m1.attr, m.source.sorts)
    return Structure(ent, attr, m.source, m1.universe)


def bridge_schema(m1: Structure, m: SchemaMorphism) -> StructureMorphism:
    """``reduct ⇄ m1`` with components ``⟨r, 1_K, f, 1_Y⟩``."""
    reduct = reduct_along_schema(m1, m)
    return StructureMorphism(reduct, m1, m.ent_map, _maps.identity(m1.universe.keys),
                             m.sort_map, _maps.identity(m1.universe.values))


def image_along_universe(m2: Structure, u: UniverseMorphism) -> Structure:
    """``⟨k⁻¹(E2), ⟨σ2, τ1⟩, g⁻¹(A2)⟩`` over the target universe."""
    if u.source != m2.universe:
        raise InvalidInput("universe morphism does not start at the structure's universe")
    _require_structure(m2)
    _require_morphism(check_universe_morphism, u)
    ent = inverse_image_by_instances(u.key_map, m2.ent, u.target.keys)
    attr = inverse_image_by_instances(u.val_map, m2.attr, u.target.values)
    return Structure(ent, attr, m2.schema, u.target)


def bridge_universe(m2: Structure, u: UniverseMorphism) -> StructureMorphism:
    """``m2 ⇄ image`` with components ``⟨1_R, k, 1_X, g⟩``."""
    image = image_along_universe(m2, u)
    return StructureMorphism(m2, image, _maps.identity(m2.schema.entity_types), u.key_map,
                             _maps.identity(m2.schema.sorts), u.val_map)


@dataclass(frozen=True)
class FiberedMorphismWitness:
    """Both factorizations of a structure morphism.

    Schema route: ``source --schema_leg--> schema_mid --schema_bridge--> target``
    where ``schema_leg`` lies over the source schema.  Universe route:
    ``source --universe_bridge--> universe_mid --universe_leg--> target`` where
    ``universe_leg`` lies over the target universe.
    """

    original: StructureMorphism
    schema_mid: Structure
    schema_leg: StructureMorphism
    schema_bridge: StructureMorphism
    universe_mid: Structure
    universe_bridge: StructureMorphism
    universe_leg: StructureMorphism

    def schema_composite(self) -> StructureMorphism:
        return compose_structure_morphisms(self.schema_leg, self.schema_bridge)

    def universe_composite(self) -> StructureMorphism:
        return compose_structure_morphisms(self.universe_bridge, self.universe_leg)


def factorize_structure_morphism(phi: StructureMorphism) -> FiberedMorphismWitness:
    verdict = check_structure_morphism(phi)
    if not verdict.ok:
        raise InvalidMorphism(f"structure morphism violates {verdict.laws()}", verdict)
    m2, m1 = phi.source, phi.target

    schema_bridge = bridge_schema(m1, phi.schema_morphism())
    schema_mid = schema_bridge.source
    schema_leg = StructureMorphism(m2, schema_mid, _maps.identity(m2.schema.entity_types), phi.k,
                                   _maps.identity(m2.schema.sorts), phi.g)

    universe_bridge = bridge_universe(m2, phi.universe_morphism())
    universe_mid = universe_bridge.target
    universe_leg = StructureMorphism(universe_mid, m1, phi.r, _maps.identity(m1.universe.keys),
                                     phi.f, _maps.identity(m1.universe.values))

    return FiberedMorphismWitness(phi, schema_mid, schema_leg, schema_bridge,
                                  universe_mid, universe_bridge, universe_leg)


def check_fixed_fiber_morphism(phi: StructureMorphism, mode: Literal["schema", "universe"]) -> Verdict:
    """Valid and lying over one fixed schema (``r``, ``f`` identities) or universe (``k``, ``g``).

    Component failures are reported as ``fiber.<map>`` violations with the
    offending names; law failures as in ``check_structure_morphism``.
    """
    try:
        verdict = check_structure_morphism(phi)
    except FoleError as err:
        return Verdict((Violation("morphism", (), str(err)),))
    src, tgt = phi.source, phi.target
    if mode == "schema":
        checks = [("r", phi.r, src.schema.entity_types, tgt.schema.entity_types),
                  ("f", phi.f, src.schema.sorts, tgt.schema.sorts)]
    elif mode == "universe":
        checks = [("k", phi.k, tgt.universe.keys, src.universe.keys),
                  ("g", phi.g, tgt.universe.values, src.universe.values)]
    else:
        raise ValueError(f"mode must be 'schema' or 'universe', not {mode!r}")
    bad = []
    for name, fn, domain, codomain in checks:
        if set(domain) != set(codomain):
            bad.append(Violation(f"fiber.{name}", (), "carriers differ"))
        bad += [Violation(f"fiber.{name}", (x,)) for x in domain if fn.get(x) != x]
    return Verdict.merge(verdict, Verdict(tuple(bad)))
