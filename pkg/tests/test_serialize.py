import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphactors import serialize as S
from graphactors.randomgen import random_admissible_relation, random_bisection, random_cylinder, random_graph
from graphactors.relations import relation_to_family
from graphactors.samples import chain_to_parallel_relation


def test_path_json(g1):
    assert S.path_to_json(g1.path("u1")) == {"vertex": "u1"}
    assert S.path_to_json(g1.path("e2 e1")) == {"edges": ["e2", "e1"]}
    assert S.path_from_json({"edges": ["e2", "e1"]}, g1) == g1.path("e2 e1")


def test_graph_json(g1):
    obj = S.graph_to_json(g1)
    assert obj["edges"][0] == {"id": "e1", "src": "u1", "rng": "u2"}
    assert S.graph_from_json(obj) == g1


def test_bad_path_is_schema_error(g1):
    with pytest.raises(S.SchemaError):
        S.path_from_json({"edges": ["e1", "e2"]}, g1)


def test_unresolved_graph(g1):
    with pytest.raises(S.SchemaError, match="unresolved"):
        S.cylinder_from_json({"graph": "nope", "paths": []}, {"G1": g1})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_round_trips(seed):
    rng = random.Random(seed)
    g = random_graph(rng, acyclic=rng.random() < 0.5)
    graphs = {g.name: g}
    assert S.graph_from_json(json.loads(S.dumps(S.graph_to_json(g)))) == g
    c = random_cylinder(rng, g)
    assert S.cylinder_from_json(json.loads(S.dumps(S.cylinder_to_json(c))), graphs) == c
    b = random_bisection(rng, g)
    assert S.bisection_from_json(json.loads(S.dumps(S.bisection_to_json(b))), graphs) == b

    rel = random_admissible_relation(rng)
    gs = {rel.source_graph.name: rel.source_graph, rel.target_graph.name: rel.target_graph}
    assert S.relation_from_json(json.loads(S.dumps(S.relation_to_json(rel))), gs) == rel
    fam = relation_to_family(rel)
    text = S.dumps(S.family_to_json(fam))
    back = S.family_from_json(json.loads(text), gs)
    assert back.omega == fam.omega and back.t == fam.t
    assert S.dumps(S.family_to_json(back)) == text


def test_relation_json_shape(g1, g2):
    obj = S.relation_to_json(chain_to_parallel_relation(g1, g2))
    assert obj["r0"] == [["u1", "v1"], ["u2", "v2"], ["u3", "v2"]]
    assert obj["r1"] == [[{"edges": ["e1"]}, "f1"], [{"edges": ["e2", "e1"]}, "f2"]]
