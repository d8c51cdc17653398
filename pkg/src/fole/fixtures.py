"""A small company model: employees, departments, projects and the
many-to-many ``works_on`` relationship modeled as the entity type ``Act``.

``Emp``, ``Dept`` and ``Proj`` are both entity types and sorts, so the
``dept``, ``employee`` and ``project`` slots hold foreign keys.
"""

from __future__ import annotations

from .structure import Structure

SIGNATURES = {
    "Emp": {"name": "Str", "id": "Nat", "dept": "Dept"},
    "Dept": {"name": "Str", "id": "Nat", "location": "Str"},
    "Proj": {"name": "Str", "id": "Nat", "budget": "Nat"},
    "Act": {"entry_date": "Date", "job_descr": "Str", "employee": "Emp", "project": "Proj"},
}

TUPLES = {
    "e1": {"name": "Alice", "id": "7", "dept": "d1"},
    "d1": {"name": "Research", "id": "5", "location": "Houston"},
    "p1": {"name": "ProductX", "id": "3", "budget": "50000"},
    "a1": {"entry_date": "2013-01-01", "job_descr": "design", "employee": "e1", "project": "p1"},
}

EXTENTS = {
    "Str": ["Alice", "Research", "Houston", "ProductX", "design"],
    "Nat": ["7", "5", "3", "50000"],
    "Date": ["2013-01-01"],
    "Emp": ["e1"],
    "Dept": ["d1"],
    "Proj": ["p1"],
}

ENTITY_EXTENTS = {"Emp": ["e1"], "Dept": ["d1"], "Proj": ["p1"], "Act": ["a1"]}


def company(
    *,
    signatures=None,
    tuples=None,
    extents=None,
    entity_extents=None,
    extra_values=(),
    extra_keys=(),
) -> Structure:
    """The company structure; keyword overrides build mutants of it."""
    signatures = SIGNATURES if signatures is None else signatures
    tuples = TUPLES if tuples is None else tuples
    extents = EXTENTS if extents is None else extents
    entity_extents = ENTITY_EXTENTS if entity_extents is None else entity_extents
    values = {y for ext in extents.values() for y in ext}
    values |= {v for tup in tuples.values() for v in tup.values()}
    values |= set(extra_values)
    return Structure.build(
        entity_types=signatures.keys(),
        keys=set(tuples) | set(extra_keys),
        ent_incidence=[(r, k) for r, ks in entity_extents.items() for k in ks],
        sorts=extents.keys(),
        values=values,
        attr_incidence=[(x, y) for x, ys in extents.items() for y in ys],
        signatures=signatures,
        tuples=tuples,
    )
