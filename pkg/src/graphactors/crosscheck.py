"""Randomized comparison of normal-form operations with the set oracle."""

from __future__ import annotations

import random

from . import oracle as O
from .graph import Path
from .randomgen import random_bisection, random_graph, random_pairs, random_paths
from .shift import (
    NotABisection,
    bis_canonicalize,
    bis_inverse,
    bis_product,
    bis_range,
    bis_source,
    bis_union,
    cyl_canonicalize,
    cyl_difference,
    cyl_equals,
    cyl_intersection,
    cyl_subset,
    cyl_union,
)


def _refine(rng: random.Random, g, paths: list[Path]) -> list[Path]:
    """Another generator list for the same set: split some generators into
    their one-edge extensions and add some redundant extensions."""
    out = []
    for x in paths:
        kids = g.children(x)
        r = rng.random()
        if kids and r < 0.4:
            out.extend(kids)
        elif kids and r < 0.6:
            out.extend([x, rng.choice(kids)])
        else:
            out.append(x)
    rng.shuffle(out)
    return out


def _refine_pairs(rng: random.Random, g, pairs):
    out = []
    for x, y in pairs:
        kids = g.children(x)
        r = rng.random()
        if kids and r < 0.4:
            out.extend((c, Path(y.edges + c.edges[-1:], y.range, c.source)) for c in kids)
        else:
            out.append((x, y))
    rng.shuffle(out)
    return out


def cross_check_case(rng: random.Random, *, max_len: int = 4) -> list[str]:
    """Run every operation once on a random acyclic graph; return discrepancies."""
    g = random_graph(rng, max_vertices=5, max_edges=8, acyclic=True)
    bad: list[str] = []

    def expect(ok: bool, what: str) -> None:
        if not ok:
            bad.append(f"{g!r} {g.edges}: {what}")

    pa = random_paths(rng, g, rng.randint(0, 4), max_len)
    pb = random_paths(rng, g, rng.randint(0, 4), max_len)
    a, b = cyl_canonicalize(g, pa), cyl_canonicalize(g, pb)
    ea, eb = O.eval_paths(g, pa), O.eval_paths(g, pb)
    expect(O.eval_cylinder(a) == ea, f"canonicalize {pa}")
    expect(O.eval_cylinder(b) == eb, f"canonicalize {pb}")
    expect(cyl_canonicalize(g, _refine(rng, g, pa)) == a, f"normal form not unique for {pa}")
    expect(O.eval_cylinder(cyl_union(a, b)) == ea | eb, f"union {a} | {b}")
    expect(O.eval_cylinder(cyl_difference(a, b)) == ea - eb, f"difference {a} - {b}")
    expect(O.eval_cylinder(cyl_intersection(a, b)) == ea & eb, f"intersection {a} & {b}")
    expect(cyl_equals(a, b) == (ea == eb), f"equality {a} == {b}")
    expect(cyl_subset(a, b) == (ea <= eb), f"subset {a} <= {b}")

    # raw unions of basics: error exactly when the arrow set is not a bisection
    raw = random_pairs(rng, g, rng.randint(0, 4), max_len)
    arrows = O.eval_pairs(g, raw)
    try:
        c = bis_canonicalize(g, raw)
    except NotABisection:
        expect(not O.is_bisection_set(arrows), f"spurious bisection error on {raw}")
    else:
        expect(O.is_bisection_set(arrows), f"accepted non-bisection {raw}")
        expect(O.eval_bisection(c) == arrows, f"bisection canonicalize {raw}")
        expect(bis_canonicalize(g, _refine_pairs(rng, g, raw)) == c, f"bisection normal form not unique {raw}")

    s = random_bisection(rng, g, max_len=max_len)
    t = random_bisection(rng, g, max_len=max_len)
    es, et = O.eval_bisection(s), O.eval_bisection(t)
    expect(O.eval_bisection(bis_product(s, t)) == O.set_product(es, et), f"product {s} * {t}")
    expect(O.eval_bisection(bis_inverse(s)) == O.set_inverse(es), f"inverse {s}")
    expect(O.eval_cylinder(bis_range(s)) == O.set_range(es), f"range {s}")
    expect(O.eval_cylinder(bis_source(s)) == O.set_source(es), f"source {s}")
    expect((s == t) == (es == et), f"bisection equality {s} == {t}")
    try:
        u = bis_union(s, t)
    except NotABisection:
        expect(not O.is_bisection_set(es | et), f"spurious union error {s} | {t}")
    else:
        expect(O.is_bisection_set(es | et), f"union accepted non-bisection {s} | {t}")
        expect(O.eval_bisection(u) == es | et, f"bisection union {s} | {t}")
    return bad


def cross_check(seed: int, cases: int) -> list[str]:
    rng = random.Random(seed)
    out: list[str] = []
    for _ in range(cases):
        out.extend(cross_check_case(rng))
    return out
