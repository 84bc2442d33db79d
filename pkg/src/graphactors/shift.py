"""Compact-open subsets of the boundary path space and compact-open bisections
of the boundary path groupoid, kept in a unique normal form.

A :class:`CylinderSet` is a finite union of cylinders ``Z_x`` (all boundary
paths that start with ``x`` on the range side).  A :class:`Bisection` is a
finite union of basic bisections ``Z(x, y) = {(xz, |x|-|y|, yz)}``.

The normal form of either is an antichain of generators in which no complete
family of one-edge extensions ``{x·e : r(e) = s(x)}`` appears (it is replaced
by ``x``), sorted by length and then identifiers.  In a finite graph every
cylinder is nonempty and ``Z_x`` is the disjoint union of its one-edge
extensions whenever ``s(x)`` receives an edge, so two generator lists denote
the same set exactly when their normal forms coincide.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .graph import DirectedGraph, Path, path_prefix

PathKey = tuple[str, tuple[str, ...]]
PairKey = tuple[PathKey, PathKey]


class GraphMismatch(ValueError):
    """Operands live over different graphs."""


class NotABisection(ValueError):
    """A union of basic bisections on which range or source is not injective."""

    def __init__(self, side: str, first: tuple[Path, Path], second: tuple[Path, Path]):
        self.side = side
        self.first = first
        self.second = second
        super().__init__(
            f"{side}-injectivity fails: Z({first[0]}, {first[1]}) and "
            f"Z({second[0]}, {second[1]}) overlap on {side}"
        )


def _key(x: Path) -> PathKey:
    return (x.range, x.edges)


def _prefix_keys(x: Path) -> Iterable[PathKey]:
    for k in range(len(x.edges) + 1):
        yield (x.range, x.edges[:k])


def _parent(g: DirectedGraph, x: Path) -> Path:
    last = g.edge_map[x.edges[-1]]
    if len(x.edges) == 1:
        return Path.vertex(x.range)
    return Path(x.edges[:-1], x.range, last.rng)


def _antichain(paths: Iterable[Path]) -> list[Path]:
    kept: dict[PathKey, Path] = {}
    for x in sorted(set(paths), key=len):
        if not any(k in kept for k in _prefix_keys(x)):
            kept[_key(x)] = x
    return list(kept.values())


def _first_overlap(paths: list[Path]) -> tuple[int, int] | None:
    """Indices of two comparable (or equal) paths in ``paths``, if any."""
    seen: dict[PathKey, int] = {}
    for i in sorted(range(len(paths)), key=lambda i: len(paths[i])):
        x = paths[i]
        for k in _prefix_keys(x):
            if k in seen:
                return seen[k], i
        seen[_key(x)] = i
    return None


@dataclass(frozen=True, eq=True)
class CylinderSet:
    graph: DirectedGraph
    generators: tuple[Path, ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __bool__(self) -> bool:
        return bool(self.generators)

    def __or__(self, other: CylinderSet) -> CylinderSet:
        return cyl_union(self, other)

    def __and__(self, other: CylinderSet) -> CylinderSet:
        return cyl_intersection(self, other)

    def __sub__(self, other: CylinderSet) -> CylinderSet:
        return cyl_difference(self, other)

    def __le__(self, other: CylinderSet) -> bool:
        return cyl_subset(self, other)

    def __str__(self) -> str:
        if not self.generators:
            return "{}"
        return " ⊔ ".join(f"Z[{x}]" for x in self.generators)

    def __repr__(self) -> str:
        return f"CylinderSet({self.graph.name}: {self})"


def cyl_canonicalize(graph: DirectedGraph, paths: Iterable[Path]) -> CylinderSet:
    gens = _antichain(paths)
    by_len: dict[int, list[Path]] = defaultdict(list)
    for x in gens:
        by_len[len(x)].append(x)
    top = max(by_len, default=0)
    for n in range(top, 0, -1):
        siblings: dict[PathKey, list[Path]] = defaultdict(list)
        for x in by_len[n]:
            siblings[(x.range, x.edges[:-1])].append(x)
        keep = []
        for kids in siblings.values():
            parent = _parent(graph, kids[0])
            if len(kids) == len(graph.incoming(parent.source)):
                by_len[n - 1].append(parent)
            else:
                keep.extend(kids)
        by_len[n] = keep
    out = sorted(x for xs in by_len.values() for x in xs)
    return CylinderSet(graph, tuple(out))


def cylinder(graph: DirectedGraph, *paths: Path | str) -> CylinderSet:
    """Convenience constructor: ``cylinder(g, "u1", "e2 e1")``."""
    return cyl_canonicalize(graph, [p if isinstance(p, Path) else graph.path(p) for p in paths])


def empty_cylinder(graph: DirectedGraph) -> CylinderSet:
    return CylinderSet(graph, ())


def full_unit_space(graph: DirectedGraph) -> CylinderSet:
    return cyl_canonicalize(graph, [Path.vertex(v) for v in graph.vertices])


def _same_graph(a, b) -> DirectedGraph:
    if a.graph is not b.graph and a.graph != b.graph:
        raise GraphMismatch(f"graphs differ: {a.graph.name!r} vs {b.graph.name!r}")
    return a.graph


def cyl_union(a: CylinderSet, b: CylinderSet) -> CylinderSet:
    g = _same_graph(a, b)
    return cyl_canonicalize(g, a.generators + b.generators)


def cyl_intersection(a: CylinderSet, b: CylinderSet) -> CylinderSet:
    g = _same_graph(a, b)
    out = []
    for x in a.generators:
        for y in b.generators:
            if path_prefix(x, y):
                out.append(y)
            elif path_prefix(y, x):
                out.append(x)
    return cyl_canonicalize(g, out)


def _subtract(g: DirectedGraph, x: Path, others: list[Path], out: list[Path]) -> None:
    # others: generators of the subtrahend that meet Z_x
    if any(path_prefix(y, x) for y in others):
        return
    longer = [y for y in others if path_prefix(x, y)]
    if not longer:
        out.append(x)
        return
    # some y strictly extends x, so s(x) receives edges and Z_x splits
    for c in g.children(x):
        _subtract(g, c, [y for y in longer if path_prefix(c, y)], out)


def cyl_difference(a: CylinderSet, b: CylinderSet) -> CylinderSet:
    g = _same_graph(a, b)
    out: list[Path] = []
    for x in a.generators:
        meets = [y for y in b.generators if path_prefix(y, x) or path_prefix(x, y)]
        _subtract(g, x, meets, out)
    return cyl_canonicalize(g, out)


def cyl_is_empty(a: CylinderSet) -> bool:
    return not a.generators


def cyl_equals(a: CylinderSet, b: CylinderSet) -> bool:
    _same_graph(a, b)
    return a.generators == b.generators


def cyl_subset(a: CylinderSet, b: CylinderSet) -> bool:
    return cyl_is_empty(cyl_difference(a, b))


def cyl_disjoint(a: CylinderSet, b: CylinderSet) -> bool:
    return cyl_is_empty(cyl_intersection(a, b))


# -- bisections ---------------------------------------------------------------


def _pair_key(p: tuple[Path, Path]) -> PairKey:
    return (_key(p[0]), _key(p[1]))


def _pair_ancestor_keys(p: tuple[Path, Path]) -> Iterable[PairKey]:
    """Keys of ``(x, y)`` with ``p == (x·w, y·w)``, including ``p`` itself."""
    x, y = p
    yield _pair_key(p)
    n = 0
    while n < len(x.edges) and n < len(y.edges) and x.edges[-1 - n] == y.edges[-1 - n]:
        n += 1
        yield ((x.range, x.edges[: len(x.edges) - n]), (y.range, y.edges[: len(y.edges) - n]))


def _pair_sort_key(p: tuple[Path, Path]) -> tuple:
    return (p[0].sort_key(), p[1].sort_key())


@dataclass(frozen=True, eq=True)
class Bisection:
    graph: DirectedGraph
    generators: tuple[tuple[Path, Path], ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __bool__(self) -> bool:
        return bool(self.generators)

    def __mul__(self, other: Bisection) -> Bisection:
        return bis_product(self, other)

    def __or__(self, other: Bisection) -> Bisection:
        return bis_union(self, other)

    def __invert__(self) -> Bisection:
        return bis_inverse(self)

    @property
    def range(self) -> CylinderSet:
        return bis_range(self)

    @property
    def source(self) -> CylinderSet:
        return bis_source(self)

    def __str__(self) -> str:
        if not self.generators:
            return "{}"
        return " ⊔ ".join(f"Z({x}, {y})" for x, y in self.generators)

    def __repr__(self) -> str:
        return f"Bisection({self.graph.name}: {self})"


def bis_canonicalize(graph: DirectedGraph, pairs: Iterable[tuple[Path, Path]]) -> Bisection:
    """Normal form of a union of basic bisections.

    Raises :class:`NotABisection` when range or source fails to be injective
    on the union.
    """
    raw = set()
    for x, y in pairs:
        if x.source != y.source:
            raise ValueError(f"Z({x}, {y}) is undefined: sources differ")
        raw.add((x, y))
    kept: dict[PairKey, tuple[Path, Path]] = {}
    for p in sorted(raw, key=lambda p: len(p[0]) + len(p[1])):
        if not any(k in kept for k in _pair_ancestor_keys(p)):
            kept[_pair_key(p)] = p

    # contract complete families (x·e, y·e) -> (x, y), longest first
    by_len: dict[int, list[tuple[Path, Path]]] = defaultdict(list)
    for p in kept.values():
        by_len[len(p[0]) + len(p[1])].append(p)
    top = max(by_len, default=0)
    for n in range(top, 1, -1):
        siblings: dict[PairKey, list[tuple[Path, Path]]] = defaultdict(list)
        for x, y in by_len[n]:
            if x.edges and y.edges and x.edges[-1] == y.edges[-1]:
                siblings[((x.range, x.edges[:-1]), (y.range, y.edges[:-1]))].append((x, y))
            else:
                siblings[_pair_key((x, y))].append((x, y))
        keep = []
        for kids in siblings.values():
            x, y = kids[0]
            if x.edges and y.edges and x.edges[-1] == y.edges[-1]:
                px, py = _parent(graph, x), _parent(graph, y)
                if len(kids) == len(graph.incoming(px.source)):
                    by_len[n - 2].append((px, py))
                    continue
            keep.extend(kids)
        by_len[n] = keep
    gens = [p for ps in by_len.values() for p in ps]

    for side, idx in (("range", 0), ("source", 1)):
        hit = _first_overlap([p[idx] for p in gens])
        if hit is not None:
            i, j = hit
            raise NotABisection(side, gens[i], gens[j])
    gens.sort(key=_pair_sort_key)
    return Bisection(graph, tuple(gens))


def basic(graph: DirectedGraph, x: Path | str, y: Path | str) -> Bisection:
    """``Z(x, y)`` as a one-generator bisection."""
    x = x if isinstance(x, Path) else graph.path(x)
    y = y if isinstance(y, Path) else graph.path(y)
    return bis_canonicalize(graph, [(x, y)])


def bisection(graph: DirectedGraph, *pairs: tuple[Path | str, Path | str]) -> Bisection:
    ps = []
    for x, y in pairs:
        ps.append((x if isinstance(x, Path) else graph.path(x), y if isinstance(y, Path) else graph.path(y)))
    return bis_canonicalize(graph, ps)


def empty_bisection(graph: DirectedGraph) -> Bisection:
    return Bisection(graph, ())


def _pair_product(x: Path, y: Path, x2: Path, y2: Path) -> tuple[Path, Path] | None:
    # Z(x, y) · Z(x2, y2)
    if path_prefix(y, x2):
        w = x2.edges[len(y.edges):]
        return (Path(x.edges + w, x.range, x2.source), y2)
    if path_prefix(x2, y):
        w = y.edges[len(x2.edges):]
        return (x, Path(y2.edges + w, y2.range, y.source))
    return None


def bis_product(a: Bisection, b: Bisection) -> Bisection:
    g = _same_graph(a, b)
    out = []
    for x, y in a.generators:
        for x2, y2 in b.generators:
            p = _pair_product(x, y, x2, y2)
            if p is not None:
                out.append(p)
    return bis_canonicalize(g, out)


def bis_inverse(a: Bisection) -> Bisection:
    return Bisection(a.graph, tuple(sorted(((y, x) for x, y in a.generators), key=_pair_sort_key)))


def bis_range(a: Bisection) -> CylinderSet:
    return cyl_canonicalize(a.graph, (x for x, _ in a.generators))


def bis_source(a: Bisection) -> CylinderSet:
    return cyl_canonicalize(a.graph, (y for _, y in a.generators))


def bis_union(a: Bisection, b: Bisection) -> Bisection:
    g = _same_graph(a, b)
    return bis_canonicalize(g, a.generators + b.generators)


def bis_union_all(graph: DirectedGraph, parts: Iterable[Bisection]) -> Bisection:
    gens = []
    for p in parts:
        if p.graph is not graph and p.graph != graph:
            raise GraphMismatch(f"graphs differ: {graph.name!r} vs {p.graph.name!r}")
        gens.extend(p.generators)
    return bis_canonicalize(graph, gens)


def cyl_union_all(graph: DirectedGraph, parts: Iterable[CylinderSet]) -> CylinderSet:
    gens = []
    for p in parts:
        if p.graph is not graph and p.graph != graph:
            raise GraphMismatch(f"graphs differ: {graph.name!r} vs {p.graph.name!r}")
        gens.extend(p.generators)
    return cyl_canonicalize(graph, gens)


def embed_identity(s: CylinderSet) -> Bisection:
    """The unit-space bisection ``{(z, 0, z) : z in s}``."""
    return Bisection(s.graph, tuple((x, x) for x in s.generators))


def restrict_source(a: Bisection, s: CylinderSet) -> Bisection:
    return bis_product(a, embed_identity(s))


def bis_subset(a: Bisection, b: Bisection) -> bool:
    """Arrow-set inclusion ``a ⊆ b``."""
    return restrict_source(b, bis_source(a)) == a
