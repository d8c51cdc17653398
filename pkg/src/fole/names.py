"""Reserved names used by generated constructions.

Parallel sums tag the left summand with ``E:`` and the right with ``A:`` so
that the union is disjoint even when the summands share names.  The key
embedding adds one index, ``⟐self``, in front of every signature.
"""

from __future__ import annotations

ENTITY_TAG = "E:"
ATTRIBUTE_TAG = "A:"
SELF_INDEX = "⟐self"
# index used by unify() for the one-slot self-description of promoted sorts
VALUE_INDEX = "value"

RESERVED_PREFIXES = (ENTITY_TAG, ATTRIBUTE_TAG)


def tag_entity(name: str) -> str:
    return ENTITY_TAG + name


def tag_attribute(name: str) -> str:
    return ATTRIBUTE_TAG + name


def untag(name: str) -> str:
    for prefix in RESERVED_PREFIXES:
        if name.startswith(prefix):
            return name[len(prefix):]
    return name


def is_reserved(name: str) -> bool:
    return name == SELF_INDEX or name.startswith(RESERVED_PREFIXES)
