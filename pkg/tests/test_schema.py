import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fole.errors import EndpointMismatch, PartialMap
from fole.generate import valid_structure_morphism
from fole.lists import IndexedList
from fole.schema import (
    Schema,
    Universe,
    UniverseMorphism,
    SchemaMorphism,
    check_schema_morphism,
    check_universe_morphism,
    compose_schema_morphisms,
    compose_universe_morphisms,
    identity_schema_morphism,
    identity_universe_morphism,
    schema_wellformedness,
    universe_wellformedness,
)
from strategies import structure_morphisms


def rename_values(universe, g):
    return Universe(universe.keys, {g.get(y, y) for y in universe.values},
                    {k: {i: g.get(y, y) for i, y in t.items()} for k, t in universe.tuples.items()})


@given(st.randoms(use_true_random=False))
def test_chains_compose(rng):
    inner = valid_structure_morphism(rng)
    outer = valid_structure_morphism(rng, target=inner.source)
    s = compose_schema_morphisms(outer.schema_morphism(), inner.schema_morphism())
    u = compose_universe_morphisms(outer.universe_morphism(), inner.universe_morphism())
    assert check_schema_morphism(s).ok
    assert check_universe_morphism(u).ok


class TestWellformedness:
    def test_fixture(self, fixture_model):
        assert schema_wellformedness(fixture_model.schema).ok
        assert universe_wellformedness(fixture_model.universe).ok

    def test_dangling(self):
        s = Schema(["r", "q"], ["x"], {"r": {"a": "y"}})
        assert {(v.law, v.names) for v in schema_wellformedness(s).violations} == {
            ("schema.total", ("q",)), ("schema.sort", ("r", "a"))}
        u = Universe(["k"], [], {"k": {"a": "v"}, "j": {}})
        assert {(v.law, v.names) for v in universe_wellformedness(u).violations} == {
            ("universe.extra", ("j",)), ("universe.value", ("k", "a"))}


class TestSchemaMorphism:
    def test_identity(self, fixture_model):
        assert check_schema_morphism(identity_schema_morphism(fixture_model.schema)).ok

    def test_collapse_emp_and_proj(self, fixture_model):
        s2 = fixture_model.schema
        f = {x: x for x in s2.sorts} | {"Dept": "Nat"}
        r = {"Emp": "Emp", "Proj": "Emp", "Dept": "Dept", "Act": "Act"}
        sigs1 = {"Emp": {"name": "Str", "id": "Nat", "dept": "Nat"},
                 "Dept": {"name": "Str", "id": "Nat", "location": "Str"},
                 "Act": {"entry_date": "Date", "job_descr": "Str", "employee": "Emp", "project": "Proj"}}
        s1 = Schema(sigs1, set(f.values()), sigs1)
        # independent pointwise evaluation of the condition
        expected = sorted((r2,) for r2, sig in s2.signatures.items()
                          if {i: f[x] for i, x in sig.items()} != sigs1[r[r2]])
        assert expected == [("Proj",)]
        verdict = check_schema_morphism(SchemaMorphism(s2, s1, r, f))
        assert [v.names for v in verdict.violations] == expected

    def test_dropping_a_sort_is_partial(self, fixture_model):
        s = fixture_model.schema
        f = {x: x for x in s.sorts if x != "Dept"}
        with pytest.raises(PartialMap):
            check_schema_morphism(SchemaMorphism(s, s, {r: r for r in s.entity_types}, f))

    @given(structure_morphisms)
    def test_identity_is_neutral(self, phi):
        m = phi.schema_morphism()
        assert compose_schema_morphisms(identity_schema_morphism(m.source), m) == m
        assert compose_schema_morphisms(m, identity_schema_morphism(m.target)) == m

    def test_compose_renamings(self, fixture_model):
        s = fixture_model.schema
        ren1 = {x: x.lower() for x in s.sorts}
        ren2 = {x: x + "_" for x in ren1.values()}
        mid = Schema(s.entity_types, ren1.values(),
                     {r: {i: ren1[x] for i, x in sig.items()} for r, sig in s.signatures.items()})
        end = Schema(s.entity_types, ren2.values(),
                     {r: {i: ren2[x] for i, x in sig.items()} for r, sig in mid.signatures.items()})
        ident = {r: r for r in s.entity_types}
        first = SchemaMorphism(end, mid, ident, {v: k for k, v in ren2.items()})
        then = SchemaMorphism(mid, s, ident, {v: k for k, v in ren1.items()})
        composed = compose_schema_morphisms(first, then)
        assert composed.sort_map == {x.lower() + "_": x for x in s.sorts}
        assert check_schema_morphism(composed).ok

    def test_endpoint_mismatch(self, fixture_model):
        s = fixture_model.schema
        other = Schema([], [], {})
        with pytest.raises(EndpointMismatch):
            compose_schema_morphisms(identity_schema_morphism(s), identity_schema_morphism(other))


class TestUniverseMorphism:
    def test_identity(self, fixture_model):
        assert check_universe_morphism(identity_universe_morphism(fixture_model.universe)).ok

    def test_value_renaming(self, fixture_model):
        u1 = fixture_model.universe
        g = {y: y for y in u1.values} | {"Alice": "A"}
        u2 = rename_values(u1, g)
        assert u2.tau("e1") == IndexedList({"name": "A", "id": "7", "dept": "d1"})
        assert check_universe_morphism(UniverseMorphism(u2, u1, {k: k for k in u1.keys}, g)).ok

    def test_key_mismatch(self, fixture_model):
        u = fixture_model.universe
        k = {key: key for key in u.keys} | {"a1": "e1"}
        verdict = check_universe_morphism(UniverseMorphism(u, u, k, {y: y for y in u.values}))
        assert u.tau("e1") != u.tau("a1")
        assert [v.names for v in verdict.violations] == [("a1",)]

    def test_compose_renamings(self, fixture_model):
        u1 = fixture_model.universe
        g1 = {y: y for y in u1.values} | {"Alice": "A"}
        u2 = rename_values(u1, g1)
        g2 = {y: y for y in u2.values} | {"A": "B"}
        u3 = rename_values(u2, g2)
        ident = {k: k for k in u1.keys}
        composed = compose_universe_morphisms(UniverseMorphism(u3, u2, ident, g2),
                                              UniverseMorphism(u2, u1, ident, g1))
        assert composed.val_map["Alice"] == "B"
        assert check_universe_morphism(composed).ok

    @given(structure_morphisms)
    def test_identity_is_neutral(self, phi):
        m = phi.universe_morphism()
        assert compose_universe_morphisms(identity_universe_morphism(m.source), m) == m
        assert compose_universe_morphisms(m, identity_universe_morphism(m.target)) == m

    def test_endpoint_mismatch(self, fixture_model):
        u = fixture_model.universe
        with pytest.raises(EndpointMismatch):
            compose_universe_morphisms(identity_universe_morphism(u),
                                       identity_universe_morphism(Universe([], [], {})))


def test_associativity(fixture_model):
    rng = random.Random(7)
    for _ in range(50):
        a = valid_structure_morphism(rng)
        b = valid_structure_morphism(rng, target=a.source)
        c = valid_structure_morphism(rng, target=b.source)
        sa, sb, sc = (p.schema_morphism() for p in (a, b, c))
        assert compose_schema_morphisms(compose_schema_morphisms(sc, sb), sa) == \
            compose_schema_morphisms(sc, compose_schema_morphisms(sb, sa))
        ua, ub, uc = (p.universe_morphism() for p in (a, b, c))
        assert compose_universe_morphisms(compose_universe_morphisms(uc, ub), ua) == \
            compose_universe_morphisms(uc, compose_universe_morphisms(ub, ua))
