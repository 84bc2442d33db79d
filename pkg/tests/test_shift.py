import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphactors import oracle as O
from graphactors.graph import Path
from graphactors.randomgen import random_bisection, random_cylinder, random_graph
from graphactors.samples import chain_graph
from graphactors.shift import (
    GraphMismatch,
    NotABisection,
    basic,
    bis_canonicalize,
    bis_inverse,
    bis_product,
    bis_range,
    bis_source,
    bis_union,
    bisection,
    cyl_canonicalize,
    cyl_difference,
    cyl_equals,
    cyl_intersection,
    cyl_is_empty,
    cyl_subset,
    cyl_union,
    cylinder,
    embed_identity,
    empty_bisection,
    empty_cylinder,
    full_unit_space,
)


def gens(s):
    return [str(x) for x in s.generators]


# -- cylinder sets: expected values come from the boundary path enumeration --


def test_canonicalize_contracts_complete_family(g2):
    raw = [g2.path("f1"), g2.path("f2")]
    assert O.eval_paths(g2, raw) == O.eval_cylinder(cylinder(g2, "v2"))
    assert gens(cyl_canonicalize(g2, raw)) == ["v2"]


def test_canonicalize_chain_contraction(g1):
    raw = [g1.path("u1"), g1.path("e2 e1"), g1.path("u1")]
    s = cyl_canonicalize(g1, raw)
    assert O.eval_cylinder(s) == O.eval_paths(g1, raw)
    assert gens(s) == ["u1", "u3"]


def test_canonicalize_empty(g1):
    assert cyl_canonicalize(g1, []) == empty_cylinder(g1)


def test_union(g1, g2):
    assert gens(cylinder(g1, "u2") | cylinder(g1, "u3")) == ["u2", "u3"]
    s = cylinder(g1, "u1", "u3")
    assert cyl_union(s, empty_cylinder(g1)) == s
    assert gens(cylinder(g2, "f1") | cylinder(g2, "f2")) == ["v2"]


def test_union_graph_mismatch(g1, g2):
    with pytest.raises(GraphMismatch):
        cyl_union(cylinder(g1, "u1"), cylinder(g2, "v1"))


def test_difference(g1, g2):
    d = cyl_difference(cylinder(g2, "v2"), cylinder(g2, "f1"))
    assert O.eval_cylinder(d) == O.eval_cylinder(cylinder(g2, "v2")) - O.eval_cylinder(cylinder(g2, "f1"))
    assert gens(d) == ["f2"]
    s = cylinder(g1, "u1", "u2")
    assert cyl_is_empty(s - s)
    assert cyl_difference(cylinder(g1, "u1"), cylinder(g1, "u2")) == cylinder(g1, "u1")


def test_equality_and_subset(g1, g2):
    assert cyl_equals(cyl_canonicalize(g2, [g2.path("f1"), g2.path("f2")]), cylinder(g2, "v2"))
    assert cyl_subset(empty_cylinder(g1), cylinder(g1, "u3"))
    assert cyl_subset(cylinder(g1, "u2"), cylinder(g1, "u2", "u3"))
    assert not cyl_subset(cylinder(g1, "u2", "u3"), cylinder(g1, "u2"))


def test_full_unit_space(g1, g2):
    from graphactors.graph import DirectedGraph

    assert gens(full_unit_space(g1)) == ["u1", "u2", "u3"]
    assert gens(full_unit_space(g2)) == ["v1", "v2"]
    assert not full_unit_space(DirectedGraph("E", (), ()))


# -- bisections: expected values come from the explicit 9-arrow groupoids --


def test_bis_canonicalize_contracts(g1):
    raw = [(g1.path("e2 e1"), g1.path("e1"))]
    b = bis_canonicalize(g1, raw)
    assert O.eval_bisection(b) == O.eval_pairs(g1, raw)
    assert b.generators == ((g1.path("e2"), g1.path("u2")),)


def test_bis_canonicalize_empty(g1):
    assert bis_canonicalize(g1, []) == empty_bisection(g1)


def test_bis_canonicalize_rejects_shared_source(g2):
    raw = [(g2.path("f1"), g2.path("v1")), (g2.path("f2"), g2.path("v1"))]
    assert not O.is_bisection_set(O.eval_pairs(g2, raw))
    with pytest.raises(NotABisection) as exc:
        bis_canonicalize(g2, raw)
    assert exc.value.side == "source"


def test_product(g1, g2):
    a, b = basic(g2, "f2", "f1"), basic(g2, "f1", "v1")
    p = bis_product(a, b)
    assert O.eval_bisection(p) == O.set_product(O.eval_bisection(a), O.eval_bisection(b))
    assert p == basic(g2, "f2", "v1")
    assert bis_product(basic(g1, "u1", "e1"), basic(g1, "e1", "u1")) == basic(g1, "u1", "u1")
    assert not bis_product(basic(g1, "e1", "u1"), basic(g1, "e2", "u2"))


def test_product_oracle_arrow(g2):
    p = bis_product(basic(g2, "f2", "f1"), basic(g2, "f1", "v1"))
    assert O.eval_bisection(p) == {O.GroupoidArrow(g2.path("f2"), 1, g2.path("v1"))}


def test_inverse(g1):
    assert bis_inverse(basic(g1, "e1", "u1")) == basic(g1, "u1", "e1")
    assert bis_inverse(empty_bisection(g1)) == empty_bisection(g1)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_inverse_involution(seed):
    rng = random.Random(seed)
    g = random_graph(rng, acyclic=rng.random() < 0.5)
    a = random_bisection(rng, g)
    assert bis_inverse(bis_inverse(a)) == a


def test_range_source(g1):
    b = basic(g1, "e2 e1", "u1")
    assert bis_range(b) == cylinder(g1, "u3")
    assert O.eval_cylinder(bis_range(b)) == O.set_range(O.eval_bisection(b))
    assert bis_source(b) == cylinder(g1, "u1")
    assert not bis_range(empty_bisection(g1))


def test_union_of_bisections(g2):
    u = bis_union(basic(g2, "f1", "v1"), basic(g2, "f2", "f1"))
    assert u.generators == ((g2.path("f1"), g2.path("v1")), (g2.path("f2"), g2.path("f1")))
    a = basic(g2, "f1", "v1")
    assert bis_union(a, empty_bisection(g2)) == a
    with pytest.raises(NotABisection):
        bis_union(basic(g2, "f1", "v1"), basic(g2, "f2", "v1"))


def test_embed_identity(g1, g2):
    assert embed_identity(cylinder(g1, "u1")) == basic(g1, "u1", "u1")
    assert not embed_identity(empty_cylinder(g1))
    assert embed_identity(full_unit_space(g2)) == bisection(g2, ("v1", "v1"), ("v2", "v2"))


def test_oracle_materialization_closed(g1, g2):
    for g in (g1, g2):
        arrows = O.materialize_groupoid(g)
        assert O.set_inverse(arrows) == arrows
        assert O.set_product(arrows, arrows) == arrows
        units = {a for a in arrows if a.offset == 0 and a.range_path == a.source_path}
        assert units == O.set_units(O.boundary_paths(g))


# -- properties ---------------------------------------------------------------


def _acyclic(seed):
    rng = random.Random(seed)
    return rng, random_graph(rng, max_vertices=5, max_edges=8, acyclic=True)


def _cyclic(seed):
    rng = random.Random(seed)
    return rng, random_graph(rng, max_vertices=4, max_edges=6, acyclic=False)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_incomparable_cylinders_disjoint(seed):
    rng, g = _acyclic(seed)
    ps = list(g.paths(3))
    for _ in range(10):
        x, y = rng.choice(ps), rng.choice(ps)
        meet = O.eval_cylinder(cylinder(g, x)) & O.eval_cylinder(cylinder(g, y))
        assert bool(meet) == (x == y or O.path_prefix(x, y) or O.path_prefix(y, x))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_boolean_identities(seed):
    rng, g = _cyclic(seed) if seed % 2 else _acyclic(seed)
    a, b, c = (random_cylinder(rng, g) for _ in range(3))
    assert (a | b) | c == a | (b | c)
    assert (a & b) & c == a & (b & c)
    assert a | (a & b) == a
    assert a & (a | b) == a
    assert a - (a - b) == a & b
    assert (a - b) | (a & b) == a
    assert cyl_is_empty((a - b) & b)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_groupoid_laws(seed):
    rng, g = _cyclic(seed) if seed % 2 else _acyclic(seed)
    a, b, c = (random_bisection(rng, g) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * ~a * a == a
    assert embed_identity(bis_range(a)) * a == a
    assert a * embed_identity(bis_source(a)) == a
    assert a * ~a == embed_identity(bis_range(a))
    assert ~a * a == embed_identity(bis_source(a))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_unit_space_expansion(seed):
    rng, g = _cyclic(seed) if seed % 2 else _acyclic(seed)
    pieces = [g.edge_path(e.id) for e in g.edges] + [Path.vertex(v) for v in g.singular_vertices]
    assert cyl_canonicalize(g, pieces) == full_unit_space(g)


def test_random_generators_fuzz_against_oracle():
    from graphactors.crosscheck import cross_check

    assert cross_check(seed=12345, cases=200) == []
