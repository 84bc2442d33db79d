"""Relation morphisms between graphs, presented by their vertex pairs ``r0``
and path-to-edge pairs ``r1``, and the passage to and from dynamical
Cuntz–Krieger families."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .families import Check, DCKFamily, Witness, edge_compat_piece, verify_family
from .graph import DirectedGraph, GraphError, Path, path_prefix
from .shift import (
    CylinderSet,
    NotABisection,
    bis_canonicalize,
    cyl_canonicalize,
    cyl_difference,
    cyl_intersection,
)


class AdmissibilityError(ValueError):
    def __init__(self, report: AdmissibilityReport):
        self.report = report
        super().__init__(f"relation is not admissible: fails {', '.join(report.failed)}")


class PreconditionError(ValueError):
    """A family lacks a property needed to read off a relation."""

    def __init__(self, condition: str, witness: Witness):
        self.condition = condition
        self.witness = witness
        at = ", ".join(witness.at)
        super().__init__(f"{condition} fails at ({at}): {witness.value} ({witness.note})")


@dataclass(frozen=True)
class RelationMorphism:
    source_graph: DirectedGraph
    target_graph: DirectedGraph
    r0: frozenset[tuple[str, str]]
    r1: frozenset[tuple[Path, str]]

    @classmethod
    def build(
        cls,
        source_graph: DirectedGraph,
        target_graph: DirectedGraph,
        r0: Iterable[tuple[str, str]],
        r1: Iterable[tuple[Path | str, str]],
    ) -> RelationMorphism:
        pairs = frozenset(
            (x if isinstance(x, Path) else source_graph.path(x), f) for x, f in r1
        )
        return cls(source_graph, target_graph, frozenset(map(tuple, r0)), pairs)

    def preimage_vertex(self, v: str) -> list[str]:
        return sorted(u for u, w in self.r0 if w == v)

    def preimage_edge(self, f: str) -> list[Path]:
        return sorted(x for x, g in self.r1 if g == f)

    def __str__(self) -> str:
        pairs = [f"({u},{v})" for u, v in sorted(self.r0)]
        pairs += [f"({x},{f})" for x, f in sorted(self.r1, key=lambda p: (p[1], p[0].sort_key()))]
        return "{" + ", ".join(pairs) + "}"


def validate_relation(r: RelationMorphism) -> list[str]:
    """Problems with ``r`` as a relation morphism (empty means valid)."""
    g1, g2 = r.source_graph, r.target_graph
    for x, f in r.r1:
        if not g1.is_valid_path(x):
            raise GraphError(f"{x} is not a path of {g1.name!r}")
        if f not in g2.edge_map:
            raise GraphError(f"{f!r} is not an edge of {g2.name!r}")
    problems = []
    for u, v in sorted(r.r0):
        if u not in g1.vertex_set:
            problems.append(f"vertex pair ({u}, {v}): {u!r} is not a vertex of {g1.name!r}")
        if v not in g2.vertex_set:
            problems.append(f"vertex pair ({u}, {v}): {v!r} is not a vertex of {g2.name!r}")
    for x, f in sorted(r.r1, key=lambda p: (p[1], p[0].sort_key())):
        edge = g2.edge_map[f]
        if (x.source, edge.src) not in r.r0:
            problems.append(f"source preserving fails for ({x}, {f}): ({x.source}, {edge.src}) missing")
        if (x.range, edge.rng) not in r.r0:
            problems.append(f"range preserving fails for ({x}, {f}): ({x.range}, {edge.rng}) missing")
    return problems


@dataclass
class AdmissibilityReport:
    vertex_disjoint: Check
    source_bijective: Check
    monotone: Check
    proper: Check
    regular: Check
    fiber_sizes: dict[str, int] = field(default_factory=dict)

    @property
    def checks(self) -> list[Check]:
        return [self.vertex_disjoint, self.source_bijective, self.monotone, self.proper, self.regular]

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    @property
    def admissible(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        from .serialize import admissibility_to_json

        return admissibility_to_json(self)


def _vertex_omega(r: RelationMorphism, v: str) -> CylinderSet:
    return cyl_canonicalize(r.source_graph, [Path.vertex(u) for u in r.preimage_vertex(v)])


def check_admissible(r: RelationMorphism) -> AdmissibilityReport:
    g2 = r.target_graph

    vd = Check("vertex_disjoint")
    images = defaultdict(list)
    for u, v in r.r0:
        images[u].append(v)
    for u in sorted(images):
        if len(images[u]) > 1:
            vd.fail(u, *sorted(images[u]), note="vertex related to several target vertices")

    sb = Check("source_bijective")
    for f in sorted(g2.edge_map):
        xs = r.preimage_edge(f)
        fiber = r.preimage_vertex(g2.edge_map[f].src)
        by_source = defaultdict(list)
        for x in xs:
            by_source[x.source].append(x)
        for u, hits in sorted(by_source.items()):
            if len(hits) > 1:
                sb.fail(f, u, note="not injective: " + ", ".join(map(str, hits)))
        for u in fiber:
            if u not in by_source:
                sb.fail(f, u, note="not surjective: no related path with this source")

    mono = Check("monotone")
    r1 = sorted(r.r1, key=lambda p: (p[0].sort_key(), p[1]))
    for (x, f), (x2, f2) in combinations(r1, 2):
        if path_prefix(x, x2) or path_prefix(x2, x):
            mono.fail(f"{x}:{f}", f"{x2}:{f2}", note="comparable paths in distinct pairs")

    proper = Check("proper")
    sizes = {v: len(r.preimage_vertex(v)) for v in sorted(g2.vertices)}
    sizes.update({f: len(r.preimage_edge(f)) for f in sorted(g2.edge_map)})

    reg = Check("regular")
    for v in sorted(g2.regular_vertices):
        omega = _vertex_omega(r, v)
        cover = cyl_canonicalize(
            r.source_graph,
            [x for f in g2.incoming(v) for x in r.preimage_edge(f)],
        )
        gap = cyl_difference(omega, cover)
        if gap:
            reg.fail(v, value=gap, note="not covered by paths related to incoming edges")

    return AdmissibilityReport(vd, sb, mono, proper, reg, sizes)


def relation_to_family(r: RelationMorphism, *, check: bool = True) -> DCKFamily:
    """The family ``Omega_v = U Z_u``, ``T_f = U Z(x, s(x))`` over ``r``."""
    if check:
        problems = validate_relation(r)
        if problems:
            raise ValueError("; ".join(problems))
        rep = check_admissible(r)
        if not rep.admissible:
            raise AdmissibilityError(rep)
    g1, g2 = r.source_graph, r.target_graph
    omega = {v: _vertex_omega(r, v) for v in g2.vertices}
    t = {}
    for f in g2.edge_map:
        try:
            t[f] = bis_canonicalize(g1, [(x, Path.vertex(x.source)) for x in r.preimage_edge(f)])
        except NotABisection:
            rep = check_admissible(r)
            if rep.admissible:
                raise
            raise AdmissibilityError(rep) from None
    return DCKFamily(g2, g1, omega, t)


def family_to_relation(fam: DCKFamily) -> RelationMorphism:
    """Read the relation off a family satisfying the vertex and edge
    compatibility conditions; raises :class:`PreconditionError` otherwise."""
    rep = verify_family(fam)
    for c in (rep.dck1, rep.dck2, rep.dck3, rep.dck4, rep.compat_531, rep.compat_532):
        if not c.passed:
            raise PreconditionError(c.name, c.failures[0])
    g1, g2 = fam.ambient_graph, fam.source_graph
    r0 = set()
    for u in sorted(g1.vertices):
        zu = CylinderSet(g1, (Path.vertex(u),))
        for v, om in fam.omega.items():
            if cyl_intersection(zu, om) == zu:
                r0.add((u, v))
    r1 = set()
    for f in fam.t:
        for u in sorted(g1.vertices):
            piece = edge_compat_piece(fam, f, u)
            if piece:
                (x, _), = piece.generators
                r1.add((x, f))
    return RelationMorphism(g1, g2, frozenset(r0), frozenset(r1))
