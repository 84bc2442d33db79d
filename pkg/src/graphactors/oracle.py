"""Brute-force set semantics for acyclic graphs.

For an acyclic finite graph the boundary path space is the finite set of paths
that end at a vertex receiving no edges, and the boundary path groupoid is the
finite set of triples ``(p, |p|-|q|, q)`` with ``s(p) == s(q)``.  Everything
here enumerates those sets explicitly and is independent of the normal-form
machinery in :mod:`graphactors.shift`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import DirectedGraph, GraphError, Path, path_concat, path_prefix
from .shift import Bisection, CylinderSet


class CyclicGraphError(GraphError):
    pass


@dataclass(frozen=True)
class GroupoidArrow:
    range_path: Path
    offset: int
    source_path: Path

    def __repr__(self) -> str:
        return f"({self.range_path}, {self.offset}, {self.source_path})"


def _require_acyclic(g: DirectedGraph) -> None:
    if not g.is_acyclic:
        raise CyclicGraphError(f"graph {g.name!r} has a cycle; its boundary path space is infinite")


def boundary_paths(g: DirectedGraph) -> frozenset[Path]:
    _require_acyclic(g)
    out = set()
    stack = [Path.vertex(v) for v in g.vertices]
    while stack:
        x = stack.pop()
        kids = g.children(x)
        if not kids:
            out.add(x)
        stack.extend(kids)
    return frozenset(out)


def materialize_groupoid(g: DirectedGraph) -> frozenset[GroupoidArrow]:
    bd = boundary_paths(g)
    by_source: dict[str, list[Path]] = {}
    for z in bd:
        by_source.setdefault(z.source, []).append(z)
    return frozenset(
        GroupoidArrow(p, len(p) - len(q), q)
        for zs in by_source.values()
        for p in zs
        for q in zs
    )


def eval_cylinder(s: CylinderSet) -> frozenset[Path]:
    bd = boundary_paths(s.graph)
    return frozenset(z for z in bd if any(path_prefix(x, z) for x in s.generators))


def eval_basic(g: DirectedGraph, x: Path, y: Path) -> frozenset[GroupoidArrow]:
    bd = boundary_paths(g)
    k = len(x) - len(y)
    return frozenset(
        GroupoidArrow(path_concat(x, z), k, path_concat(y, z))
        for z in bd
        if z.range == x.source
    )


def eval_bisection(b: Bisection) -> frozenset[GroupoidArrow]:
    out: set[GroupoidArrow] = set()
    for x, y in b.generators:
        out |= eval_basic(b.graph, x, y)
    return frozenset(out)


def eval_pairs(g: DirectedGraph, pairs: Iterable[tuple[Path, Path]]) -> frozenset[GroupoidArrow]:
    out: set[GroupoidArrow] = set()
    for x, y in pairs:
        out |= eval_basic(g, x, y)
    return frozenset(out)


def eval_paths(g: DirectedGraph, paths: Iterable[Path]) -> frozenset[Path]:
    bd = boundary_paths(g)
    paths = list(paths)
    return frozenset(z for z in bd if any(path_prefix(x, z) for x in paths))


# -- setwise groupoid operations ---------------------------------------------


def set_product(a: Iterable[GroupoidArrow], b: Iterable[GroupoidArrow]) -> frozenset[GroupoidArrow]:
    by_range: dict[Path, list[GroupoidArrow]] = {}
    for h in b:
        by_range.setdefault(h.range_path, []).append(h)
    return frozenset(
        GroupoidArrow(g.range_path, g.offset + h.offset, h.source_path)
        for g in a
        for h in by_range.get(g.source_path, ())
    )


def set_inverse(a: Iterable[GroupoidArrow]) -> frozenset[GroupoidArrow]:
    return frozenset(GroupoidArrow(g.source_path, -g.offset, g.range_path) for g in a)


def set_range(a: Iterable[GroupoidArrow]) -> frozenset[Path]:
    return frozenset(g.range_path for g in a)


def set_source(a: Iterable[GroupoidArrow]) -> frozenset[Path]:
    return frozenset(g.source_path for g in a)


def set_units(points: Iterable[Path]) -> frozenset[GroupoidArrow]:
    return frozenset(GroupoidArrow(z, 0, z) for z in points)


def is_bisection_set(a: Iterable[GroupoidArrow]) -> bool:
    a = list(a)
    return len(set_range(a)) == len(a) and len(set_source(a)) == len(a)


def oracle_equal(symbolic: CylinderSet | Bisection, setwise: frozenset) -> bool:
    """Compare a normal-form value with an explicitly computed set."""
    if isinstance(symbolic, CylinderSet):
        return eval_cylinder(symbolic) == frozenset(setwise)
    return eval_bisection(symbolic) == frozenset(setwise)
