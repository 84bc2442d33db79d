"""Finite directed graphs and their finite paths.

Paths are written range-to-source: ``e2 e1`` means ``s(e2) == r(e1)``, and a
path is extended at its source end.  A vertex is a path of length zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or paths."""


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    src: str
    rng: str


@dataclass(frozen=True)
class Path:
    """A finite path.

    ``edges`` is listed range-to-source.  ``range`` and ``source`` are stored
    so that a path can be manipulated without its graph at hand.
    """

    edges: tuple[str, ...]
    range: str
    source: str

    @classmethod
    def vertex(cls, v: str) -> Path:
        return cls((), v, v)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __bool__(self) -> bool:
        return True

    def sort_key(self) -> tuple:
        # (length, identifiers); vertices and edges never share identifiers
        return (len(self.edges), self.edges or (self.range,))

    def __lt__(self, other: Path) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return " ".join(self.edges) if self.edges else self.range

    def __repr__(self) -> str:
        return f"Path({self})"


def path_concat(x: Path, y: Path) -> Path:
    """Return ``x·y``; requires ``source(x) == range(y)``."""
    if x.source != y.range:
        raise GraphError(
            f"cannot concatenate {x} and {y}: source {x.source} != range {y.range}"
        )
    return Path(x.edges + y.edges, x.range, y.source)


def path_prefix(x: Path, y: Path) -> bool:
    """True iff ``y == x·z`` for some path ``z``."""
    if x.range != y.range or len(x.edges) > len(y.edges):
        return False
    return y.edges[: len(x.edges)] == x.edges


def path_comparable(x: Path, y: Path) -> bool:
    return path_prefix(x, y) or path_prefix(y, x)


def strip_prefix(x: Path, y: Path) -> Path:
    """Return ``z`` with ``y == x·z``; assumes ``path_prefix(x, y)``."""
    n = len(x.edges)
    if n == len(y.edges):
        return Path.vertex(y.source)
    rest = y.edges[n:]
    return Path(rest, x.source, y.source)


@dataclass(frozen=True)
class DirectedGraph:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(
        cls,
        name: str,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str] | Edge],
        *,
        check: bool = True,
    ) -> DirectedGraph:
        """Build a graph from vertex ids and ``(id, src, rng)`` triples."""
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        g = cls(name, tuple(vertices), es)
        if check:
            problems = validate_graph(g)
            if problems:
                raise GraphError("; ".join(problems))
        return g

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def _incoming(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc.setdefault(e.rng, []).append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in inc.items()}

    def incoming(self, v: str) -> tuple[str, ...]:
        """Edge ids with range ``v`` (sorted)."""
        return self._incoming.get(v, ())

    def is_regular(self, v: str) -> bool:
        # finite graph: regular iff some edge has range v
        return bool(self.incoming(v))

    @cached_property
    def regular_vertices(self) -> frozenset[str]:
        return frozenset(v for v in self.vertices if self.is_regular(v))

    @cached_property
    def singular_vertices(self) -> frozenset[str]:
        return self.vertex_set - self.regular_vertices

    def vertex_path(self, v: str) -> Path:
        if v not in self.vertex_set:
            raise GraphError(f"unknown vertex {v!r} in graph {self.name!r}")
        return Path.vertex(v)

    def edge_path(self, e: str) -> Path:
        try:
            edge = self.edge_map[e]
        except KeyError:
            raise GraphError(f"unknown edge {e!r} in graph {self.name!r}") from None
        return Path((e,), edge.rng, edge.src)

    def path(self, spec: str | Sequence[str]) -> Path:
        """Parse a path.

        A string naming a vertex gives the vertex path; otherwise a
        whitespace-separated string or a sequence of edge ids, range-to-source.
        """
        if isinstance(spec, str):
            if spec in self.vertex_set:
                return Path.vertex(spec)
            spec = spec.split()
        if not spec:
            raise GraphError("empty edge sequence; use a vertex for length-0 paths")
        p = self.edge_path(spec[0])
        for e in spec[1:]:
            p = path_concat(p, self.edge_path(e))
        return p

    def is_valid_path(self, x: Path) -> bool:
        if x.is_vertex:
            return x.range in self.vertex_set and x.source == x.range
        try:
            return self.path(x.edges) == x
        except GraphError:
            return False

    def children(self, x: Path) -> list[Path]:
        """One-edge extensions of ``x`` at its source end, in sorted order."""
        return [Path(x.edges + (e,), x.range, self.edge_map[e].src) for e in self.incoming(x.source)]

    def is_boundary_path(self, x: Path) -> bool:
        """Finite boundary paths are those that cannot be extended."""
        return not self.incoming(x.source)

    def paths(self, max_len: int) -> Iterator[Path]:
        """All paths of length <= ``max_len`` in canonical order."""
        layer = [Path.vertex(v) for v in sorted(self.vertices)]
        for _ in range(max_len + 1):
            yield from sorted(layer)
            layer = [c for x in layer for c in self.children(x)]

    @cached_property
    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            indeg[e.rng] += 1
            out[e.src].append(e.rng)
        todo = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while todo:
            v = todo.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    todo.append(w)
        return seen == len(self.vertices)

    def __repr__(self) -> str:
        return f"DirectedGraph({self.name!r}, |V|={len(self.vertices)}, |E|={len(self.edges)})"


def validate_graph(g: DirectedGraph) -> list[str]:
    """Return the list of violated graph invariants (empty means valid)."""
    problems = []
    seen: set[str] = set()
    for v in g.vertices:
        if v in seen:
            problems.append(f"duplicate vertex {v!r}")
        seen.add(v)
    vertex_ids = set(g.vertices)
    edge_ids: set[str] = set()
    for e in g.edges:
        if e.id in edge_ids:
            problems.append(f"duplicate edge {e.id!r}")
        elif e.id in vertex_ids:
            problems.append(f"identifier {e.id!r} used for both a vertex and an edge")
        edge_ids.add(e.id)
        if e.src not in vertex_ids:
            problems.append(f"dangling src: edge {e.id!r} has src {e.src!r}")
        if e.rng not in vertex_ids:
            problems.append(f"dangling rng: edge {e.id!r} has rng {e.rng!r}")
    return problems
