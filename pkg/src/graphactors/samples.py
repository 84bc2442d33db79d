"""A small worked pair of graphs whose algebras are both 3x3 matrices.

``chain_graph``: u1 --e1--> u2 --e2--> u3.
``parallel_graph``: two edges f1, f2 from v1 to v2.

The relation ``{(u1,v1), (u2,v2), (u3,v2), (e2 e1, f2), (e1, f1)}`` is
admissible and gives a family of the parallel graph in the groupoid of the
chain; :func:`backward_family` is its inverse.
"""

from __future__ import annotations

from .families import DCKFamily
from .graph import DirectedGraph
from .relations import RelationMorphism
from .shift import basic, bisection, cylinder


def chain_graph(name: str = "G1") -> DirectedGraph:
    return DirectedGraph.build(name, ["u1", "u2", "u3"], [("e1", "u1", "u2"), ("e2", "u2", "u3")])


def parallel_graph(name: str = "G2") -> DirectedGraph:
    return DirectedGraph.build(name, ["v1", "v2"], [("f1", "v1", "v2"), ("f2", "v1", "v2")])


def chain_to_parallel_relation(g1: DirectedGraph | None = None, g2: DirectedGraph | None = None) -> RelationMorphism:
    g1 = g1 or chain_graph()
    g2 = g2 or parallel_graph()
    return RelationMorphism.build(
        g1,
        g2,
        r0=[("u1", "v1"), ("u2", "v2"), ("u3", "v2")],
        r1=[("e2 e1", "f2"), ("e1", "f1")],
    )


def forward_family(g1: DirectedGraph | None = None, g2: DirectedGraph | None = None) -> DCKFamily:
    """The parallel graph's family in the chain's groupoid, written out."""
    g1 = g1 or chain_graph()
    g2 = g2 or parallel_graph()
    return DCKFamily(
        g2,
        g1,
        omega={"v1": cylinder(g1, "u1"), "v2": cylinder(g1, "u2", "u3")},
        t={"f1": basic(g1, "e1", "u1"), "f2": basic(g1, "e2 e1", "u1")},
    )


def backward_family(g1: DirectedGraph | None = None, g2: DirectedGraph | None = None) -> DCKFamily:
    """The chain's family in the parallel graph's groupoid."""
    g1 = g1 or chain_graph()
    g2 = g2 or parallel_graph()
    return DCKFamily(
        g1,
        g2,
        omega={"u1": cylinder(g2, "v1"), "u2": cylinder(g2, "f1"), "u3": cylinder(g2, "f2")},
        t={"e1": basic(g2, "f1", "v1"), "e2": bisection(g2, ("f2", "f1"))},
    )
