import itertools

import pytest
from hypothesis import given

from fole.classification import (
    Classification,
    Infomorphism,
    check_infomorphism,
    compose_infomorphisms,
    extent,
    factorize_infomorphism,
    identity_infomorphism,
    inverse_image_by_instances,
    inverse_image_by_types,
    parallel_sum,
)
from fole.errors import DomainMismatch, EndpointMismatch, InvalidInfomorphism, UnknownType
from fole.names import tag_attribute, tag_entity
from strategies import classifications, infomorphisms, valid_infomorphisms


def brute_force_violations(m):
    """Every (x2, y1) where the two sides of the biconditional disagree."""
    return sorted(
        (x2, y1)
        for x2, y1 in itertools.product(m.source.types, m.target.instances)
        if ((x2, m.inst_map[y1]) in m.source.incidence) != ((m.type_map[x2], y1) in m.target.incidence)
    )


class TestClassification:
    def test_dangling_pair_rejected(self):
        with pytest.raises(DomainMismatch):
            Classification(["t"], ["y"], [("t", "z")])

    def test_fixture_entity_extent(self, fixture_model):
        assert extent(fixture_model.ent, "Emp") == {"e1"}

    def test_foreign_key_values_are_keys(self, fixture_model):
        assert extent(fixture_model.attr, "Dept") == {"d1"}
        assert "d1" in fixture_model.ent.instances

    def test_empty_incidence_gives_empty_extent(self):
        c = Classification(["a", "b"], ["y"], [])
        assert extent(c, "a") == frozenset()

    def test_unknown_type(self):
        with pytest.raises(UnknownType):
            Classification(["a"], [], []).extent("b")

    @given(classifications)
    def test_extents_reconstruct_incidence(self, c):
        rebuilt = {(t, y) for t, ys in c.extent_map().items() for y in ys}
        assert rebuilt == set(c.incidence)
        assert Classification.from_extents(c.extent_map(), c.instances) == c

    @given(classifications)
    def test_intent_dual_to_extent(self, c):
        for t in c.types:
            for y in c.instances:
                assert (y in c.extent(t)) == (t in c.intent(y)) == c.holds(y, t)


class TestInfomorphismCheck:
    @given(classifications)
    def test_identity_ok(self, c):
        assert check_infomorphism(identity_infomorphism(c)).ok

    @given(infomorphisms)
    def test_agrees_with_brute_force(self, m):
        got = sorted(v.names for v in check_infomorphism(m).violations)
        assert got == brute_force_violations(m)

    def test_collapsing_differently_classified_keys(self, fixture_model):
        e = fixture_model.ent
        g = {k: k for k in e.instances}
        g["a1"] = "e1"  # a1 is an Act, e1 is an Emp
        m = Infomorphism(e, e, {r: r for r in e.types}, g)
        verdict = check_infomorphism(m)
        assert not verdict.ok
        assert {v.names for v in verdict.violations} == {("Act", "a1"), ("Emp", "a1")}

    def test_partial_map_rejected(self):
        c = Classification(["a"], ["y"], [])
        with pytest.raises(DomainMismatch):
            check_infomorphism(Infomorphism(c, c, {}, {"y": "y"}))

    @given(valid_infomorphisms, valid_infomorphisms)
    def test_composition_of_valid_is_valid(self, m, n):
        # composing with identities on either side keeps the condition
        assert check_infomorphism(compose_infomorphisms(m, identity_infomorphism(m.target))).ok
        assert check_infomorphism(compose_infomorphisms(identity_infomorphism(n.source), n)).ok

    def test_compose_endpoint_mismatch(self):
        a = Classification(["a"], [], [])
        b = Classification(["b"], [], [])
        with pytest.raises(EndpointMismatch):
            compose_infomorphisms(identity_infomorphism(a), identity_infomorphism(b))


class TestInverseImages:
    @given(classifications)
    def test_identity_type_pullback(self, c):
        assert inverse_image_by_types({t: t for t in c.types}, c) == c

    @given(classifications)
    def test_identity_instance_pullback(self, c):
        assert inverse_image_by_instances({y: y for y in c.instances}, c) == c

    def test_fixture_str_pullback(self, fixture_model):
        pulled = inverse_image_by_types({"Str": "Str"}, fixture_model.attr)
        assert pulled.types == {"Str"}
        assert pulled.extent("Str") == fixture_model.attr.extent("Str")

    def test_constant_to_empty_extent(self):
        c1 = Classification(["full", "empty"], ["y0", "y1"], [("full", "y0"), ("full", "y1")])
        pulled = inverse_image_by_types({"a": "empty", "b": "empty"}, c1)
        assert not pulled.incidence

    def test_collapse_with_identical_rows(self):
        c2 = Classification(["s", "t"], ["u", "w"], [("s", "u"), ("t", "u")])
        pulled = inverse_image_by_instances({"y": "u", "y'": "u", "z": "w"}, c2)
        assert pulled.extent("s") == {"y", "y'"}
        assert pulled.extent("t") == {"y", "y'"}

    def test_into_unclassified_instance(self):
        c2 = Classification(["s"], ["u", "w"], [("s", "u")])
        assert not inverse_image_by_instances({"y": "w"}, c2).incidence

    @given(classifications, classifications)
    def test_pullback_always_yields_infomorphism(self, c1, c2):
        if not c1.types:
            return
        t1 = sorted(c1.types)
        f = {x: t1[i % len(t1)] for i, x in enumerate(sorted(c2.types))}
        mid = inverse_image_by_types(f, c1, c2.types)
        leg = Infomorphism(mid, c1, f, {y: y for y in c1.instances})
        assert check_infomorphism(leg).ok


class TestFactorization:
    @given(classifications)
    def test_identity(self, c):
        fac = factorize_infomorphism(identity_infomorphism(c))
        assert fac.midpoint == c == fac.midpoint_alt
        assert fac.leg_g == identity_infomorphism(c)
        assert fac.leg_f == identity_infomorphism(c)

    @given(valid_infomorphisms)
    def test_dual_midpoints_and_legs(self, m):
        fac = factorize_infomorphism(m)
        assert fac.midpoint == fac.midpoint_alt
        assert check_infomorphism(fac.leg_g).ok
        assert check_infomorphism(fac.leg_f).ok
        assert compose_infomorphisms(fac.leg_g, fac.leg_f) == m

    def test_fixture_renaming(self, fixture_model):
        a1 = fixture_model.attr
        rename = {"Str": "Text"}
        a2 = Classification([rename.get(t, t) for t in a1.types],
                            a1.instances | {"extra"},
                            [(rename.get(t, t), y) for t, y in a1.incidence])
        f = {rename.get(t, t): t for t in a1.types}
        g = {y: y for y in a1.instances}  # inclusion of values
        m = Infomorphism(a2, a1, f, g)
        fac = factorize_infomorphism(m)
        for x2 in a2.types:
            assert fac.midpoint.extent(x2) == fac.midpoint_alt.extent(x2) == a1.extent(f[x2])

    @given(infomorphisms)
    def test_invalid_input_raises(self, m):
        if brute_force_violations(m):
            with pytest.raises(InvalidInfomorphism):
                factorize_infomorphism(m)


class TestParallelSum:
    @given(classifications)
    def test_sum_with_empty(self, c):
        s = parallel_sum(c, Classification())
        assert {(t[2:], y[2:]) for t, y in s.incidence} == set(c.incidence)
        assert len(s.types) == len(c.types)

    def test_fixture_tagged_extent(self, fixture_model):
        s = parallel_sum(fixture_model.ent, fixture_model.attr)
        assert s.extent(tag_entity("Emp")) == {tag_entity(k) for k in fixture_model.ent.extent("Emp")}

    @given(classifications, classifications)
    def test_no_cross_membership(self, c, d):
        s = parallel_sum(c, d)
        for t in c.types:
            for y in d.instances:
                assert not s.holds(tag_attribute(y), tag_entity(t))
