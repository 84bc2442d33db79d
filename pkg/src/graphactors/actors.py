"""Families as arrows: extension to all paths, composition, identities and
inverses."""

from __future__ import annotations

from dataclasses import dataclass, field
from threading import Lock

from .families import DCKFamily, is_nondegenerate, verify_family
from .graph import DirectedGraph, Path
from .shift import (
    Bisection,
    CylinderSet,
    GraphMismatch,
    NotABisection,
    bis_canonicalize,
    bis_inverse,
    bis_product,
    bis_range,
    bis_subset,
    cyl_canonicalize,
    cyl_subset,
    embed_identity,
)


class CompositionError(ValueError):
    pass


@dataclass
class Theta:
    """Multiplicative extension of a family to paths of its source graph.

    ``theta(v) = 1_{Omega_v}``, ``theta(e) = T_e`` and
    ``theta(x·y) = theta(x)·theta(y)``.  Results are memoized; fills are
    idempotent so concurrent use is harmless.
    """

    family: DCKFamily
    memo: dict[Path, Bisection] = field(default_factory=dict, repr=False)
    _lock: Lock = field(default_factory=Lock, repr=False, compare=False)

    def __call__(self, x: Path) -> Bisection:
        return theta_path(self, x)

    def cylinder(self, s: CylinderSet) -> CylinderSet:
        return map_cylinder(self, s)

    def bisection(self, b: Bisection) -> Bisection:
        return map_bisection(self, b)


def theta_path(th: Theta, x: Path) -> Bisection:
    hit = th.memo.get(x)
    if hit is not None:
        return hit
    fam = th.family
    if x.is_vertex:
        out = embed_identity(fam.omega[x.range])
    elif len(x.edges) == 1:
        out = fam.t[x.edges[0]]
    else:
        head = fam.source_graph.edge_path(x.edges[0])
        tail = Path(x.edges[1:], head.source, x.source)
        out = bis_product(fam.t[x.edges[0]], theta_path(th, tail))
    with th._lock:
        th.memo.setdefault(x, out)
    return out


def map_cylinder(th: Theta, s: CylinderSet) -> CylinderSet:
    """Image of a compact-open subset: ``Z_x -> r(theta(x))``."""
    amb = th.family.ambient_graph
    return cyl_canonicalize(amb, [y for x in s.generators for y in bis_range(theta_path(th, x)).generators])


def map_bisection(th: Theta, b: Bisection) -> Bisection:
    """Image of a bisection: ``Z(x, y) -> theta(x)·theta(y)^-1``."""
    amb = th.family.ambient_graph
    gens = []
    for x, y in b.generators:
        gens.extend(bis_product(theta_path(th, x), bis_inverse(theta_path(th, y))).generators)
    return bis_canonicalize(amb, gens)


def identity_family(g: DirectedGraph) -> DCKFamily:
    omega = {v: CylinderSet(g, (Path.vertex(v),)) for v in g.vertices}
    t = {e.id: Bisection(g, ((g.edge_path(e.id), Path.vertex(e.src)),)) for e in g.edges}
    return DCKFamily(g, g, omega, t)


def _require_good(f: DCKFamily, label: str) -> None:
    rep = verify_family(f)
    if not rep.accepted:
        bad = [c.name for c in (rep.dck1, rep.dck2, rep.dck3, rep.dck4) if not c.passed]
        raise CompositionError(f"{label} family is not a dynamical Cuntz–Krieger family: {bad}")
    if not rep.nondegenerate:
        raise CompositionError(f"{label} family is degenerate")


def compose_families(f: DCKFamily, g: DCKFamily, *, check_inputs: bool = True) -> DCKFamily:
    """Compose ``f`` (a family in ``G[B]``) with ``g`` (a ``B``-family).

    The result is a family of ``f.source_graph`` in ``G[g.ambient_graph]``.
    It is re-verified; any failure raises :class:`CompositionError`.
    """
    if f.ambient_graph != g.source_graph:
        raise GraphMismatch(
            f"cannot compose: {f.ambient_graph.name!r} is not the source graph {g.source_graph.name!r}"
        )
    if check_inputs:
        _require_good(f, "inner")
        _require_good(g, "outer")
    th = Theta(g)
    try:
        omega = {v: map_cylinder(th, s) for v, s in f.omega.items()}
        t = {e: map_bisection(th, b) for e, b in f.t.items()}
    except NotABisection as exc:
        raise CompositionError(f"composite is not a bisection: {exc}") from exc
    out = DCKFamily(f.source_graph, g.ambient_graph, omega, t)
    rep = verify_family(out)
    if not rep.accepted or not rep.nondegenerate:
        raise CompositionError("composite fails re-verification")
    return out


@dataclass(frozen=True)
class InverseReport:
    inverse: bool
    left_composite_matches: bool
    right_composite_matches: bool
    note: str = ""

    def __bool__(self) -> bool:
        return self.inverse

    def to_json(self) -> dict:
        return {
            "inverse": self.inverse,
            "left_composite_matches": self.left_composite_matches,
            "right_composite_matches": self.right_composite_matches,
        }


def _families_equal(a: DCKFamily, b: DCKFamily) -> bool:
    return (
        a.source_graph == b.source_graph
        and a.ambient_graph == b.ambient_graph
        and dict(a.omega) == dict(b.omega)
        and dict(a.t) == dict(b.t)
    )


def verify_inverse(f: DCKFamily, g: DCKFamily) -> InverseReport:
    """Whether ``g`` undoes ``f``.

    ``left_composite_matches`` compares ``compose(g, f)`` with the identity of
    ``g.source_graph``; ``right_composite_matches`` compares ``compose(f, g)``
    with the identity of ``f.source_graph``.
    """
    if f.ambient_graph != g.source_graph or g.ambient_graph != f.source_graph:
        return InverseReport(False, False, False, "graph mismatch")
    try:
        left = compose_families(g, f)
        right = compose_families(f, g)
    except CompositionError as exc:
        return InverseReport(False, False, False, str(exc))
    lm = _families_equal(left, identity_family(g.source_graph))
    rm = _families_equal(right, identity_family(f.source_graph))
    return InverseReport(lm and rm, lm, rm)


def _preimage_cylinder(th: Theta, target: CylinderSet, candidates: list[Path]) -> CylinderSet:
    src = th.family.source_graph
    inside = [x for x in candidates if cyl_subset(bis_range(theta_path(th, x)), target)]
    return cyl_canonicalize(src, inside)


def search_inverse(f: DCKFamily, max_len: int) -> DCKFamily | None:
    """Look for a family undoing ``f`` whose generators use paths of length
    at most ``max_len``.

    ``f`` maps each candidate component of an inverse into ``G[f.ambient]``;
    an inverse must send every vertex and edge of ``f.ambient_graph`` to the
    largest union of candidate generators whose image lies inside the
    corresponding identity piece.  That union is built per component and the
    assembled family is then checked with :func:`verify_inverse`.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    _require_good(f, "given")
    # candidate generators live over f.source_graph; f maps them to f.ambient_graph
    domain, target = f.source_graph, f.ambient_graph
    th = Theta(f)
    paths = list(domain.paths(max_len))
    omega = {}
    for v in sorted(target.vertices):
        goal = CylinderSet(target, (Path.vertex(v),))
        pre = _preimage_cylinder(th, goal, paths)
        if map_cylinder(th, pre) != goal:
            return None
        omega[v] = pre
    pairs = [(x, y) for x in paths for y in paths if x.source == y.source]
    images = {}
    for x, y in pairs:
        try:
            images[(x, y)] = bis_product(theta_path(th, x), bis_inverse(theta_path(th, y)))
        except NotABisection:
            continue
    t = {}
    for e in sorted(target.edge_map):
        goal = Bisection(target, ((target.edge_path(e), Path.vertex(target.edge_map[e].src)),))
        inside = [p for p in pairs if p in images and bis_subset(images[p], goal)]
        try:
            pre = bis_canonicalize(domain, inside)
        except NotABisection:
            return None
        if map_bisection(th, pre) != goal:
            return None
        t[e] = pre
    g = DCKFamily(target, domain, omega, t)
    rep = verify_family(g)
    if not rep.accepted or not rep.nondegenerate:
        return None
    return g if verify_inverse(f, g) else None
