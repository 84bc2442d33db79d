"""Random graphs, paths, sets and relations for property tests and the
``oracle-check`` command."""

from __future__ import annotations

import random
from collections import defaultdict

from .graph import DirectedGraph, Path
from .relations import RelationMorphism
from .shift import (
    Bisection,
    CylinderSet,
    NotABisection,
    bis_canonicalize,
    cyl_canonicalize,
)


def random_graph(
    rng: random.Random,
    *,
    max_vertices: int = 5,
    max_edges: int = 8,
    acyclic: bool = True,
    name: str = "R",
    prefix: str = "",
) -> DirectedGraph:
    """A random multigraph; ``acyclic=False`` guarantees at least one cycle."""
    n = rng.randint(1, max_vertices)
    vs = [f"{prefix}v{i}" for i in range(n)]
    m = rng.randint(0 if acyclic else 1, max_edges)
    edges = []
    for j in range(m):
        if acyclic:
            if n < 2:
                break
            a, b = sorted(rng.sample(range(n), 2))
        else:
            a, b = rng.randrange(n), rng.randrange(n)
        edges.append((f"{prefix}e{j}", vs[a], vs[b]))
    if not acyclic:
        g = DirectedGraph.build(name, vs, edges)
        if g.is_acyclic:
            e = edges[rng.randrange(len(edges))]
            edges.append((f"{prefix}e{len(edges)}", e[2], e[1]))
    return DirectedGraph.build(name, vs, edges)


def _out_edges(g: DirectedGraph) -> dict[str, list[str]]:
    out = defaultdict(list)
    for e in g.edges:
        out[e.src].append(e.id)
    return out


def random_path(rng: random.Random, g: DirectedGraph, max_len: int, *, start: str | None = None) -> Path:
    """Random walk from ``start`` (a range vertex) extending at the source end."""
    v = start if start is not None else rng.choice(g.vertices)
    x = Path.vertex(v)
    for _ in range(rng.randint(0, max_len)):
        kids = g.children(x)
        if not kids:
            break
        x = rng.choice(kids)
    return x


def random_path_to(rng: random.Random, g: DirectedGraph, source: str, max_len: int) -> Path:
    """Random path whose source vertex is ``source``."""
    out = _out_edges(g)
    edges: list[str] = []
    v = source
    for _ in range(rng.randint(0, max_len)):
        if not out[v]:
            break
        e = rng.choice(out[v])
        edges.insert(0, e)
        v = g.edge_map[e].rng
    if not edges:
        return Path.vertex(source)
    return Path(tuple(edges), v, source)


def random_paths(rng: random.Random, g: DirectedGraph, k: int, max_len: int) -> list[Path]:
    return [random_path(rng, g, max_len) for _ in range(k)]


def random_cylinder(rng: random.Random, g: DirectedGraph, *, max_gens: int = 4, max_len: int = 4) -> CylinderSet:
    return cyl_canonicalize(g, random_paths(rng, g, rng.randint(0, max_gens), max_len))


def random_pair(rng: random.Random, g: DirectedGraph, max_len: int) -> tuple[Path, Path]:
    x = random_path(rng, g, max_len)
    return x, random_path_to(rng, g, x.source, max_len)


def random_pairs(rng: random.Random, g: DirectedGraph, k: int, max_len: int) -> list[tuple[Path, Path]]:
    return [random_pair(rng, g, max_len) for _ in range(k)]


def random_bisection(rng: random.Random, g: DirectedGraph, *, max_gens: int = 4, max_len: int = 4) -> Bisection:
    """Greedily add random basic bisections while the union stays a bisection."""
    kept: list[tuple[Path, Path]] = []
    for p in random_pairs(rng, g, rng.randint(0, max_gens), max_len):
        try:
            bis_canonicalize(g, kept + [p])
        except NotABisection:
            continue
        kept.append(p)
    return bis_canonicalize(g, kept)


def random_cover(
    rng: random.Random,
    base: DirectedGraph,
    *,
    max_fiber: int = 2,
    subdivide: float = 0.0,
    extra_vertices: int = 0,
    name: str = "C",
) -> tuple[DirectedGraph, RelationMorphism]:
    """Build a graph lying over ``base`` with an admissible relation onto it.

    Every vertex ``v`` of ``base`` gets a fiber of 1..``max_fiber`` vertices.
    For each edge ``f`` and each vertex ``u`` over ``s(f)`` one path is added
    from ``u`` into the fiber over ``r(f)``; with probability ``subdivide`` it
    runs through a fresh intermediate vertex (which makes the induced family
    degenerate).  Fibers over vertices that receive edges are hit
    surjectively so that the relation is regular.
    """
    size = {v: rng.randint(1, max_fiber) for v in base.vertices}
    # shrink fibers that cannot be hit surjectively
    changed = True
    while changed:
        changed = False
        for v in base.regular_vertices:
            supply = sum(size[base.edge_map[f].src] for f in base.incoming(v))
            if supply < size[v]:
                size[v] = supply
                changed = True

    counter = iter(range(10**9))
    fiber = {v: [f"{name}{next(counter)}" for _ in range(size[v])] for v in base.vertices}
    vertices = [u for v in base.vertices for u in fiber[v]]
    r0 = [(u, v) for v in base.vertices for u in fiber[v]]

    # edge lifts (f, u) grouped by their target fiber
    lifts = defaultdict(list)
    for e in base.edges:
        for u in fiber[e.src]:
            lifts[e.rng].append((e.id, u))
    targets: dict[tuple[str, str], str] = {}
    for v, items in lifts.items():
        rng.shuffle(items)
        for i, item in enumerate(items):
            fib = fiber[v]
            targets[item] = fib[i] if i < len(fib) else rng.choice(fib)

    edges = []
    r1 = []
    eno = iter(range(10**9))
    for (f, u), w in sorted(targets.items()):
        if rng.random() < subdivide:
            mid = f"{name}{next(counter)}"
            vertices.append(mid)
            a, b = f"{name}x{next(eno)}", f"{name}x{next(eno)}"
            edges += [(a, u, mid), (b, mid, w)]
            r1.append((Path((b, a), w, u), f))
        else:
            a = f"{name}x{next(eno)}"
            edges.append((a, u, w))
            r1.append((Path((a,), w, u), f))
    fiber_vertices = [u for v in base.vertices for u in fiber[v]]
    for _ in range(extra_vertices):
        z = f"{name}{next(counter)}"
        vertices.append(z)
        if fiber_vertices and rng.random() < 0.7:
            edges.append((f"{name}x{next(eno)}", rng.choice(fiber_vertices), z))
    g = DirectedGraph.build(name, vertices, edges)
    rel = RelationMorphism(g, base, frozenset(r0), frozenset(r1))
    return g, rel


def random_admissible_relation(rng: random.Random, *, nondegenerate: bool | None = None) -> RelationMorphism:
    base = random_graph(rng, max_vertices=4, max_edges=6, acyclic=rng.random() < 0.5, name="B", prefix="b")
    if nondegenerate is None:
        nondegenerate = rng.random() < 0.5
    if nondegenerate:
        _, rel = random_cover(rng, base)
    else:
        _, rel = random_cover(rng, base, subdivide=0.5, extra_vertices=rng.randint(0, 2))
    return rel
