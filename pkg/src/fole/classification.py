"""Finite classifications and infomorphisms.

A classification is a set of types, a set of instances and an incidence
relation between them.  Entity classifications (types R, keys K) and
attribute classifications (sorts X, values Y) share this one representation.

An infomorphism ``C2 ⇄ C1`` consists of a covariant type map
``f: types(C2) -> types(C1)`` and a contravariant instance map
``g: instances(C1) -> instances(C2)`` satisfying::

    g(y1) ⊨_C2 x2   iff   y1 ⊨_C1 f(x2)
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from . import _maps
from .errors import DomainMismatch, EndpointMismatch, InvalidInfomorphism, UnknownType
from .names import tag_attribute, tag_entity
from .verdict import Verdict, Violation

Pair = tuple[str, str]


@dataclass(frozen=True)
class Classification:
    types: frozenset[str]
    instances: frozenset[str]
    incidence: frozenset[Pair]  # (type, instance)

    def __init__(self, types: Iterable[str] = (), instances: Iterable[str] = (),
                 incidence: Iterable[Pair] = ()):
        object.__setattr__(self, "types", frozenset(types))
        object.__setattr__(self, "instances", frozenset(instances))
        object.__setattr__(self, "incidence", frozenset((t, y) for t, y in incidence))
        bad = sorted(p for p in self.incidence
                     if p[0] not in self.types or p[1] not in self.instances)
        if bad:
            raise DomainMismatch(f"incidence pairs outside the carriers: {bad}")

    @classmethod
    def from_extents(cls, extents: Mapping[str, Iterable[str]],
                     instances: Iterable[str] = ()) -> "Classification":
        """Build from a type -> extent map; instances default to the union of extents."""
        pairs = [(t, y) for t, ext in extents.items() for y in ext]
        return cls(extents.keys(), set(instances) | {y for _, y in pairs}, pairs)

    @cached_property
    def _extents(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {t: set() for t in self.types}
        for t, y in self.incidence:
            out[t].add(y)
        return {t: frozenset(ys) for t, ys in out.items()}

    @cached_property
    def _intents(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {y: set() for y in self.instances}
        for t, y in self.incidence:
            out[y].add(t)
        return {y: frozenset(ts) for y, ts in out.items()}

    def holds(self, instance: str, type_: str) -> bool:
        """``instance ⊨ type_``; false for names outside the carriers."""
        return (type_, instance) in self.incidence

    def extent(self, type_: str) -> frozenset[str]:
        try:
            return self._extents[type_]
        except KeyError:
            raise UnknownType(f"unknown type {type_!r}") from None

    def intent(self, instance: str) -> frozenset[str]:
        """All types classifying ``instance``."""
        try:
            return self._intents[instance]
        except KeyError:
            raise UnknownType(f"unknown instance {instance!r}") from None

    def extent_map(self) -> dict[str, frozenset[str]]:
        return dict(self._extents)

    def __repr__(self) -> str:
        return (f"Classification(types={sorted(self.types)}, instances={sorted(self.instances)}, "
                f"incidence={sorted(self.incidence)})")


def extent(c: Classification, t: str) -> frozenset[str]:
    return c.extent(t)


@dataclass(frozen=True)
class Infomorphism:
    """``source ⇄ target``: ``type_map`` forward on types, ``inst_map`` backward on instances."""

    source: Classification
    target: Classification
    type_map: Mapping[str, str]
    inst_map: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "type_map", dict(self.type_map))
        object.__setattr__(self, "inst_map", dict(self.inst_map))

    def require_total(self) -> None:
        _maps.require_total(self.type_map, self.source.types, self.target.types,
                            what="type map")
        _maps.require_total(self.inst_map, self.target.instances, self.source.instances,
                            what="instance map")


def identity_infomorphism(c: Classification) -> Infomorphism:
    return Infomorphism(c, c, _maps.identity(c.types), _maps.identity(c.instances))


def check_infomorphism(m: Infomorphism, law: str = "infomorphism") -> Verdict:
    """Exhaustively test the fundamental condition.

    Violations carry ``names = (x2, y1)``.  Raises ``DomainMismatch`` when a
    map is not total.
    """
    m.require_total()
    c2, c1, f, g = m.source, m.target, m.type_map, m.inst_map
    bad = []
    for x2 in c2.types:
        ext1 = c1.extent(f[x2])
        ext2 = c2.extent(x2)
        for y1 in c1.instances:
            if (g[y1] in ext2) != (y1 in ext1):
                bad.append(Violation(law, (x2, y1)))
    return Verdict(tuple(bad))


def compose_infomorphisms(first: Infomorphism, then: Infomorphism) -> Infomorphism:
    """``C3 ⇄ C2`` followed by ``C2 ⇄ C1``."""
    if first.target != then.source:
        raise EndpointMismatch("middle classifications differ")
    return Infomorphism(
        first.source,
        then.target,
        _maps.compose(first.type_map, then.type_map),
        _maps.compose(then.inst_map, first.inst_map),
    )


def inverse_image_by_types(f: Mapping[str, str], c1: Classification,
                           types: Iterable[str] | None = None) -> Classification:
    """Pull ``c1`` back along a type function: ``y1 ⊨ x2`` iff ``y1 ⊨_c1 f(x2)``.

    ``types`` is the domain of ``f`` (defaults to ``f``'s keys).
    """
    types = set(f) if types is None else set(types)
    _maps.require_total(f, types, c1.types, what="type function")
    pairs = [(x2, y1) for x2 in types for y1 in c1.extent(f[x2])]
    return Classification(types, c1.instances, pairs)


def inverse_image_by_instances(g: Mapping[str, str], c2: Classification,
                               instances: Iterable[str] | None = None) -> Classification:
    """Pull ``c2`` back along an instance function: ``y1 ⊨ x2`` iff ``g(y1) ⊨_c2 x2``."""
    instances = set(g) if instances is None else set(instances)
    _maps.require_total(g, instances, c2.instances, what="instance function")
    pairs = [(x2, y1) for y1 in instances for x2 in c2.intent(g[y1])]
    return Classification(c2.types, instances, pairs)


class InfomorphismFactorization(NamedTuple):
    midpoint: Classification       # f⁻¹(C1)
    leg_g: Infomorphism            # ⟨1, g⟩ : C2 ⇄ midpoint
    leg_f: Infomorphism            # ⟨f, 1⟩ : midpoint ⇄ C1
    midpoint_alt: Classification   # g⁻¹(C2)


def factorize_infomorphism(m: Infomorphism) -> InfomorphismFactorization:
    """Split ``m`` through the inverse image of its target along the type map.

    The same midpoint arises as the inverse image of the source along the
    instance map; both are returned so callers can compare them.
    """
    verdict = check_infomorphism(m)
    if not verdict.ok:
        raise InvalidInfomorphism(
            f"{len(verdict.violations)} violation(s) of the fundamental condition")
    mid = inverse_image_by_types(m.type_map, m.target, m.source.types)
    mid_alt = inverse_image_by_instances(m.inst_map, m.source, m.target.instances)
    leg_g = Infomorphism(m.source, mid, _maps.identity(m.source.types), m.inst_map)
    leg_f = Infomorphism(mid, m.target, m.type_map, _maps.identity(m.target.instances))
    return InfomorphismFactorization(mid, leg_g, leg_f, mid_alt)


def parallel_sum(c: Classification, d: Classification) -> Classification:
    """Disjoint sum, ``c`` tagged ``E:`` and ``d`` tagged ``A:``; no cross incidence."""
    return Classification(
        [tag_entity(t) for t in c.types] + [tag_attribute(t) for t in d.types],
        [tag_entity(y) for y in c.instances] + [tag_attribute(y) for y in d.instances],
        [(tag_entity(t), tag_entity(y)) for t, y in c.incidence]
        + [(tag_attribute(t), tag_attribute(y)) for t, y in d.incidence],
    )


def sum_maps(left: Mapping[str, str], right: Mapping[str, str]) -> dict[str, str]:
    """The coproduct map ``left + right`` on tagged names."""
    out = {tag_entity(a): tag_entity(b) for a, b in left.items()}
    out.update({tag_attribute(a): tag_attribute(b) for a, b in right.items()})
    return out
