"""Dynamical Cuntz–Krieger families of one graph inside the boundary path
groupoid of another, and their verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .graph import DirectedGraph, Path
from .shift import (
    Bisection,
    CylinderSet,
    bis_product,
    bis_range,
    bis_source,
    cyl_canonicalize,
    cyl_difference,
    cyl_intersection,
    cyl_union_all,
    embed_identity,
    full_unit_space,
)


@dataclass(frozen=True)
class DCKFamily:
    """``omega[v]`` for vertices and ``t[e]`` for edges of ``source_graph``,
    all living over ``ambient_graph``."""

    source_graph: DirectedGraph
    ambient_graph: DirectedGraph
    omega: Mapping[str, CylinderSet]
    t: Mapping[str, Bisection]

    def __post_init__(self):
        missing_v = set(self.source_graph.vertices) - set(self.omega)
        missing_e = set(self.source_graph.edge_map) - set(self.t)
        if missing_v or missing_e:
            raise ValueError(
                f"family is not total: missing vertices {sorted(missing_v)}, edges {sorted(missing_e)}"
            )
        extra = (set(self.omega) - self.source_graph.vertex_set) | (
            set(self.t) - set(self.source_graph.edge_map)
        )
        if extra:
            raise ValueError(f"family has entries outside the source graph: {sorted(extra)}")
        amb = self.ambient_graph
        for val in list(self.omega.values()) + list(self.t.values()):
            if val.graph is not amb and val.graph != amb:
                raise ValueError(f"family member lives over {val.graph.name!r}, not {amb.name!r}")
        # fix a canonical key order so equal families compare and serialize alike
        object.__setattr__(self, "omega", {v: self.omega[v] for v in sorted(self.omega)})
        object.__setattr__(self, "t", {e: self.t[e] for e in sorted(self.t)})

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        lines = [f"{self.source_graph.name}-family in G[{self.ambient_graph.name}]"]
        lines += [f"  Omega[{v}] = {s}" for v, s in self.omega.items()]
        lines += [f"  T[{e}] = {b}" for e, b in self.t.items()]
        return "\n".join(lines)


def recanonicalize(f: DCKFamily) -> DCKFamily:
    """Rebuild every member from its generators (a no-op on valid input)."""
    from .shift import bis_canonicalize

    g = f.ambient_graph
    return DCKFamily(
        f.source_graph,
        g,
        {v: cyl_canonicalize(g, s.generators) for v, s in f.omega.items()},
        {e: bis_canonicalize(g, b.generators) for e, b in f.t.items()},
    )


@dataclass(frozen=True)
class Witness:
    at: tuple[str, ...]
    value: CylinderSet | Bisection | None = None
    note: str = ""


@dataclass
class Check:
    name: str
    failures: list[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, *at: str, value=None, note: str = "") -> None:
        self.failures.append(Witness(tuple(at), value, note))


@dataclass
class VerificationReport:
    dck1: Check
    dck2: Check
    dck3: Check
    dck4: Check
    nondegenerate: bool
    compat_531: Check
    compat_532: Check

    @property
    def accepted(self) -> bool:
        return self.dck1.passed and self.dck2.passed and self.dck3.passed and self.dck4.passed

    def to_json(self) -> dict:
        from .serialize import report_to_json

        return report_to_json(self)


def _check_disjoint_vertices(f: DCKFamily) -> Check:
    c = Check("dck1")
    for v, w in combinations(f.omega, 2):
        meet = cyl_intersection(f.omega[v], f.omega[w])
        if meet:
            c.fail(v, w, value=meet, note="omega sets overlap")
    return c


def _check_source_range(f: DCKFamily, ranges: dict[str, CylinderSet]) -> Check:
    c = Check("dck2")
    for e, b in f.t.items():
        edge = f.source_graph.edge_map[e]
        src = bis_source(b)
        if src != f.omega[edge.src]:
            c.fail(e, edge.src, value=src, note="source of T differs from omega at src(e)")
        excess = cyl_difference(ranges[e], f.omega[edge.rng])
        if excess:
            c.fail(e, edge.rng, value=excess, note="range of T escapes omega at rng(e)")
    return c


def _check_disjoint_ranges(f: DCKFamily, ranges: dict[str, CylinderSet]) -> Check:
    c = Check("dck3")
    for e, e2 in combinations(f.t, 2):
        meet = cyl_intersection(ranges[e], ranges[e2])
        if meet:
            c.fail(e, e2, value=meet, note="ranges overlap")
    return c


def _check_cover(f: DCKFamily, ranges: dict[str, CylinderSet]) -> Check:
    c = Check("dck4")
    g = f.source_graph
    for v in sorted(g.regular_vertices):
        cover = cyl_union_all(f.ambient_graph, (ranges[e] for e in g.incoming(v)))
        if cover != f.omega[v]:
            # report the symmetric difference, missing part first
            missing = cyl_difference(f.omega[v], cover)
            if missing:
                c.fail(v, value=missing, note="part of omega not covered by incoming ranges")
            extra = cyl_difference(cover, f.omega[v])
            if extra:
                c.fail(v, value=extra, note="incoming ranges exceed omega")
    return c


def is_nondegenerate(f: DCKFamily) -> bool:
    total = cyl_union_all(f.ambient_graph, f.omega.values())
    return total == full_unit_space(f.ambient_graph)


def check_vertex_compat(f: DCKFamily) -> Check:
    """Each vertex cylinder of the ambient graph lies in or misses each omega."""
    c = Check("compat_531")
    amb = f.ambient_graph
    for u in sorted(amb.vertices):
        zu = CylinderSet(amb, (Path.vertex(u),))
        for v, om in f.omega.items():
            meet = cyl_intersection(zu, om)
            if meet and meet != zu:
                c.fail(u, v, value=meet, note="does not come from a vertex")
    return c


def edge_compat_piece(f: DCKFamily, e: str, u: str) -> Bisection:
    """``T_e`` restricted to sources in the vertex cylinder of ``u``."""
    amb = f.ambient_graph
    return bis_product(f.t[e], embed_identity(CylinderSet(amb, (Path.vertex(u),))))


def check_edge_compat(f: DCKFamily) -> Check:
    """Each restriction ``T_e · Z_u`` is empty or a single ``Z(x, u)``."""
    c = Check("compat_532")
    for e in f.t:
        for u in sorted(f.ambient_graph.vertices):
            piece = edge_compat_piece(f, e, u)
            if not piece:
                continue
            ok = len(piece.generators) == 1 and piece.generators[0][1] == Path.vertex(u)
            if not ok:
                c.fail(e, u, value=piece, note="not a single basic bisection Z(x, u)")
    return c


def verify_family(f: DCKFamily) -> VerificationReport:
    ranges = {e: bis_range(b) for e, b in f.t.items()}
    return VerificationReport(
        dck1=_check_disjoint_vertices(f),
        dck2=_check_source_range(f, ranges),
        dck3=_check_disjoint_ranges(f, ranges),
        dck4=_check_cover(f, ranges),
        nondegenerate=is_nondegenerate(f),
        compat_531=check_vertex_compat(f),
        compat_532=check_edge_compat(f),
    )
