import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphactors.actors import identity_family
from graphactors.families import is_nondegenerate, verify_family
from graphactors.graph import Path
from graphactors.randomgen import random_admissible_relation, random_graph
from graphactors.relations import (
    AdmissibilityError,
    PreconditionError,
    RelationMorphism,
    check_admissible,
    family_to_relation,
    relation_to_family,
    validate_relation,
)
from graphactors.samples import chain_to_parallel_relation
from graphactors.shift import basic, cylinder, empty_bisection, empty_cylinder


@pytest.fixture
def rel(g1, g2):
    return chain_to_parallel_relation(g1, g2)


def test_validate(rel, g1, g2):
    assert validate_relation(rel) == []
    assert validate_relation(RelationMorphism.build(g1, g2, [], [])) == []
    broken = RelationMorphism.build(g1, g2, [("u2", "v2")], [("e1", "f1")])
    problems = validate_relation(broken)
    assert any("source preserving" in p for p in problems)


def test_admissible_example(rel):
    rep = check_admissible(rel)
    assert rep.admissible, rep.failed
    assert rep.fiber_sizes == {"v1": 1, "v2": 2, "f1": 1, "f2": 1}


def test_vertex_disjoint_failure(g1, g2):
    r = RelationMorphism.build(g1, g2, [("u1", "v1"), ("u1", "v2")], [])
    rep = check_admissible(r)
    assert not rep.vertex_disjoint.passed
    assert rep.vertex_disjoint.failures[0].at[0] == "u1"


def test_source_bijective_failure(rel, g1, g2):
    r = RelationMorphism(g1, g2, rel.r0, rel.r1 | {(g1.path("e2 e1"), "f1")})
    rep = check_admissible(r)
    assert not rep.source_bijective.passed
    assert rep.source_bijective.failures[0].at == ("f1", "u1")
    assert not rep.monotone.passed
    with pytest.raises(AdmissibilityError, match="source_bijective"):
        relation_to_family(r)
    # without the upfront check the bisection failure is still reported by name
    with pytest.raises(AdmissibilityError, match="monotone"):
        relation_to_family(r, check=False)


def test_regular_failure(g1, g2):
    r = RelationMorphism.build(g1, g2, [("u1", "v1"), ("u2", "v2"), ("u3", "v2")], [("e1", "f1")])
    rep = check_admissible(r)
    assert not rep.regular.passed
    assert rep.regular.failures[0].value == cylinder(g1, "u3")


def test_relation_to_family_example(rel, fwd):
    fam = relation_to_family(rel)
    assert fam.omega == fwd.omega and fam.t == fwd.t


def test_empty_relation_gives_empty_family():
    from graphactors.graph import DirectedGraph

    a = DirectedGraph.build("A", ["a"], [])
    b = DirectedGraph.build("B", ["b1", "b2"], [])
    fam = relation_to_family(RelationMorphism.build(a, b, [], []))
    assert fam.omega == {"b1": empty_cylinder(a), "b2": empty_cylinder(a)}
    assert verify_family(fam).accepted
    assert not is_nondegenerate(fam)


def test_identity_relation(g2):
    r = RelationMorphism.build(g2, g2, [("v1", "v1"), ("v2", "v2")], [("f1", "f1"), ("f2", "f2")])
    fam = relation_to_family(r)
    ident = identity_family(g2)
    assert fam.omega == ident.omega and fam.t == ident.t
    assert family_to_relation(ident) == r


def test_family_to_relation_example(fwd, rel):
    assert family_to_relation(fwd) == rel


def test_family_to_relation_rejects_backward(bwd):
    with pytest.raises(PreconditionError) as exc:
        family_to_relation(bwd)
    assert exc.value.condition == "compat_531"
    assert exc.value.witness.at == ("v2", "u2")
    assert exc.value.witness.value == cylinder(bwd.ambient_graph, "f1")


def _rel(seed):
    return random_admissible_relation(random.Random(seed))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_generated_relations_are_admissible(seed):
    r = _rel(seed)
    assert validate_relation(r) == []
    assert check_admissible(r).admissible


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_relation_family_is_dck(seed):
    r = _rel(seed)
    fam = relation_to_family(r)
    rep = verify_family(fam)
    assert rep.accepted and rep.compat_531.passed and rep.compat_532.passed
    covers = {u for u, _ in r.r0} == set(r.source_graph.vertices)
    assert rep.nondegenerate == covers


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_round_trips(seed):
    r = _rel(seed)
    fam = relation_to_family(r)
    back = family_to_relation(fam)
    assert back == r
    again = relation_to_family(back)
    assert again.omega == fam.omega and again.t == fam.t


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_random_relations_never_crash(seed):
    # arbitrary valid-or-not relations: admissibility failures are reported, not raised
    rng = random.Random(seed)
    g1 = random_graph(rng, max_vertices=4, max_edges=5, acyclic=False, name="A", prefix="a")
    g2 = random_graph(rng, max_vertices=3, max_edges=4, acyclic=False, name="B", prefix="b")
    r0 = {(u, rng.choice(g2.vertices)) for u in g1.vertices if rng.random() < 0.8}
    r1 = set()
    for f in g2.edges:
        for x in g1.paths(2):
            if (x.source, f.src) in r0 and (x.range, f.rng) in r0 and rng.random() < 0.3:
                r1.add((x, f.id))
    r = RelationMorphism(g1, g2, frozenset(r0), frozenset(r1))
    assert validate_relation(r) == []
    rep = check_admissible(r)
    if rep.admissible:
        fam = relation_to_family(r)
        assert verify_family(fam).accepted
        assert family_to_relation(fam) == r
    else:
        with pytest.raises(AdmissibilityError):
            relation_to_family(r)
