"""Relational and tabular readings of an entity type.

The traditional reading of ``r`` is the set of descriptor tuples of its
extent; duplicates collapse.  The tabular reading keeps the keys, so two
keys with the same descriptor give two rows.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .errors import UnknownType
from .lists import IndexedList
from .structure import (
    Structure,
    interpreted_tuples,
    key_embed,
    require_valid,
    tuple_preimage,
)


@dataclass(frozen=True)
class Relation:
    signature: IndexedList
    tuples: frozenset[IndexedList]


@dataclass(frozen=True)
class Table:
    signature: IndexedList
    rows: Mapping[str, IndexedList]

    def __post_init__(self):
        object.__setattr__(self, "rows", dict(self.rows))

    @property
    def keys(self) -> frozenset[str]:
        return frozenset(self.rows)

    def image(self) -> frozenset[IndexedList]:
        return frozenset(self.rows.values())

    def columns(self) -> list[str]:
        return list(self.signature)


def _require_type(m: Structure, r: str) -> None:
    if r not in m.ent.types:
        raise UnknownType(f"unknown entity type {r!r}")


def traditional_interpretation(m: Structure, r: str) -> Relation:
    _require_type(m, r)
    require_valid(m)
    return Relation(m.sigma(r), interpreted_tuples(m, r))


def tabular_interpretation(m: Structure, r: str) -> Table:
    _require_type(m, r)
    require_valid(m)
    return Table(m.sigma(r), {k: m.tau(k) for k in m.ent.extent(r)})


def key_embedded_table(m: Structure, r: str) -> Table:
    """The table of ``r`` in the key embedding: the key sits in the ``⟐self`` column."""
    _require_type(m, r)
    return tabular_interpretation(key_embed(m), r)


def morphic_preimage_check(m: Structure, r: str) -> tuple[frozenset[str], bool]:
    """``(τ⁻¹(I_M(r)), τ⁻¹(I_M(r)) == ext_E(r))``."""
    rel = traditional_interpretation(m, r)
    pre = tuple_preimage(m, rel.tuples)
    return pre, pre == m.ent.extent(r)
