"""Indexed lists: signatures ⟨I, s: I -> X⟩ and tuples ⟨J, t: J -> Y⟩.

Both are finite maps from index names to target names; which role a list
plays depends only on what its targets are.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .classification import Classification
from .errors import IllTypedTuple, PartialMap, TupleSpaceTooLarge, UnknownType
from .verdict import Verdict, Violation

DEFAULT_TUPLE_CAP = 10**6


class IndexedList(Mapping[str, str]):
    """Immutable, hashable map from index names to names.

    Equality is equality of arity (as a name set) and of the assignment.
    """

    __slots__ = ("_pairs", "_map")

    def __init__(self, assignment: Mapping[str, str] | Iterable[tuple[str, str]] = ()):
        items = assignment.items() if isinstance(assignment, Mapping) else assignment
        mapping: dict[str, str] = {}
        for index, target in items:
            if index in mapping and mapping[index] != target:
                raise ValueError(f"index {index!r} assigned twice")
            mapping[index] = target
        self._map = mapping
        self._pairs = tuple(sorted(mapping.items()))

    def __getitem__(self, index: str) -> str:
        return self._map[index]

    def __iter__(self) -> Iterator[str]:
        return (i for i, _ in self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IndexedList):
            return self._pairs == other._pairs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __lt__(self, other: "IndexedList") -> bool:
        return self._pairs < other._pairs

    def __repr__(self) -> str:
        body = ", ".join(f"{i}:{t}" for i, t in self._pairs)
        return f"({body})"

    @property
    def arity(self) -> frozenset[str]:
        return frozenset(self._map)

    @property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return self._pairs

    def values_set(self) -> frozenset[str]:
        return frozenset(self._map.values())

    def __add__(self, other: "IndexedList") -> "IndexedList":
        """Sum of lists over disjoint arities."""
        clash = self.arity & other.arity
        if clash:
            raise ValueError(f"arities overlap on {sorted(clash)}")
        return IndexedList(self._pairs + other._pairs)


EMPTY = IndexedList()


@dataclass(frozen=True)
class SignatureMorphism:
    """``⟨I', s'⟩ -> ⟨I, s⟩`` given by an arity map ``h: I' -> I`` with ``h·s = s'``."""

    source: IndexedList
    target: IndexedList
    arity_map: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "arity_map", dict(self.arity_map))


def sum_along(f: Mapping[str, str], lst: IndexedList) -> IndexedList:
    """Direct image ``Σ_f``: same arity, targets renamed by ``f``."""
    missing = sorted(lst.values_set() - f.keys())
    if missing:
        raise PartialMap(f"no image for {missing}")
    return IndexedList((i, f[t]) for i, t in lst.pairs)


def classify_tuple(a: Classification, sig: IndexedList, tup: IndexedList) -> bool:
    """``tup ⊨_List(a) sig``: equal index sets and pointwise ``a``-classification."""
    if tup.arity != sig.arity:
        return False
    return all(a.holds(tup[i], sig[i]) for i in sig)


def tuple_violations(a: Classification, sig: IndexedList, tup: IndexedList) -> list[tuple[str, str]]:
    """Indices where ``tup`` fails ``sig``, as ``(index, reason)`` with reason arity|sort."""
    out = [(i, "arity") for i in sorted(sig.arity ^ tup.arity)]
    out += [(i, "sort") for i in sorted(sig.arity & tup.arity) if not a.holds(tup[i], sig[i])]
    return out


def check_signature_morphism(m: SignatureMorphism) -> Verdict:
    """Violations carry ``names = (i',)``."""
    h = m.arity_map
    missing = sorted(m.source.arity - h.keys())
    if missing:
        raise PartialMap(f"arity map undefined on {missing}")
    stray = sorted(h[i] for i in m.source if h[i] not in m.target.arity)
    if stray:
        raise PartialMap(f"arity map leaves the target arity: {stray}")
    return Verdict(tuple(Violation("signature", (i,))
                         for i in m.source if m.target[h[i]] != m.source[i]))


def project_tuple(m: SignatureMorphism, tup: IndexedList, a: Classification | None = None) -> IndexedList:
    """Restrict ``tup`` (over ``m.target``) along the arity map: ``i' ↦ t(h(i'))``.

    With ``a`` given, the typing precondition ``tup ⊨ m.target`` is also checked.
    """
    try:
        ok = check_signature_morphism(m).ok
    except PartialMap as exc:
        raise IllTypedTuple(str(exc)) from None
    if not ok:
        raise IllTypedTuple("arity map does not preserve sorts")
    if tup.arity != m.target.arity:
        raise IllTypedTuple("tuple arity differs from the target signature")
    if a is not None and not classify_tuple(a, m.target, tup):
        raise IllTypedTuple("tuple is not classified by the target signature")
    return IndexedList((i, tup[m.arity_map[i]]) for i in m.source)


def tuple_count(a: Classification, sig: IndexedList) -> int:
    return math.prod(len(a.extent(s)) for s in sig.values())


def tuples_of(a: Classification, sig: IndexedList, cap: int = DEFAULT_TUPLE_CAP) -> frozenset[IndexedList]:
    """Every tuple classified by ``sig``: the product of the sort extents."""
    for s in sig.values():
        if s not in a.types:
            raise UnknownType(f"unknown sort {s!r}")
    n = tuple_count(a, sig)
    if n > cap:
        raise TupleSpaceTooLarge(f"{n} tuples exceed the cap of {cap}")
    indices = list(sig)
    domains = [sorted(a.extent(sig[i])) for i in indices]
    return frozenset(IndexedList(zip(indices, combo)) for combo in itertools.product(*domains))
