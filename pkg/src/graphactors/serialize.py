"""JSON interchange for graphs, paths, cylinder sets, bisections, families,
relations and reports.

Graphs inside other objects are referenced by name and resolved against a
mapping of known graphs.  Output is canonical: equal values serialize to
identical text.
"""

from __future__ import annotations

import json
from pathlib import Path as FsPath
from typing import Any, Mapping

from .families import Check, DCKFamily, VerificationReport, Witness
from .graph import DirectedGraph, Edge, GraphError, Path
from .relations import AdmissibilityReport, RelationMorphism
from .shift import Bisection, CylinderSet, bis_canonicalize, cyl_canonicalize


class SchemaError(ValueError):
    """Malformed or unresolvable JSON input."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- graphs and paths ---------------------------------------------------------


def graph_to_json(g: DirectedGraph, *, with_name: bool = True) -> dict:
    out: dict[str, Any] = {}
    if with_name:
        out["name"] = g.name
    out["vertices"] = list(g.vertices)
    out["edges"] = [{"id": e.id, "src": e.src, "rng": e.rng} for e in g.edges]
    return out


def graph_from_json(obj: Mapping, name: str | None = None) -> DirectedGraph:
    try:
        name = obj.get("name", name)
        if name is None:
            raise SchemaError("graph has no name")
        edges = [Edge(e["id"], e["src"], e["rng"]) for e in obj["edges"]]
        return DirectedGraph.build(name, list(obj["vertices"]), edges)
    except GraphError as exc:
        raise SchemaError(str(exc)) from exc
    except (KeyError, TypeError, AttributeError) as exc:
        raise SchemaError(f"malformed graph: {exc!r}") from exc


def path_to_json(x: Path) -> dict:
    if x.is_vertex:
        return {"vertex": x.range}
    return {"edges": list(x.edges)}


def path_from_json(obj: Mapping, g: DirectedGraph) -> Path:
    try:
        if "vertex" in obj:
            return g.vertex_path(obj["vertex"])
        return g.path(list(obj["edges"]))
    except GraphError as exc:
        raise SchemaError(str(exc)) from exc
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed path: {obj!r}") from exc


def _graph_ref(ref: Any, graphs: Mapping[str, DirectedGraph]) -> DirectedGraph:
    if isinstance(ref, Mapping):
        g = graph_from_json(ref)
        known = graphs.get(g.name)
        if known is not None and known != g:
            raise SchemaError(f"embedded graph {g.name!r} conflicts with a loaded graph")
        return g
    try:
        return graphs[ref]
    except (KeyError, TypeError):
        raise SchemaError(f"unresolved graph reference {ref!r}") from None


# -- cylinder sets and bisections ---------------------------------------------


def cylinder_to_json(s: CylinderSet) -> dict:
    return {"graph": s.graph.name, "paths": [path_to_json(x) for x in s.generators]}


def cylinder_from_json(obj: Mapping, graphs: Mapping[str, DirectedGraph]) -> CylinderSet:
    g = _graph_ref(obj.get("graph"), graphs)
    try:
        return cyl_canonicalize(g, [path_from_json(p, g) for p in obj["paths"]])
    except KeyError as exc:
        raise SchemaError(f"malformed cylinder set: {exc!r}") from exc


def bisection_to_json(b: Bisection) -> dict:
    return {"graph": b.graph.name, "pairs": [[path_to_json(x), path_to_json(y)] for x, y in b.generators]}


def bisection_from_json(obj: Mapping, graphs: Mapping[str, DirectedGraph]) -> Bisection:
    g = _graph_ref(obj.get("graph"), graphs)
    try:
        pairs = [(path_from_json(x, g), path_from_json(y, g)) for x, y in obj["pairs"]]
    except (KeyError, ValueError, TypeError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"malformed bisection: {exc!r}") from exc
    return bis_canonicalize(g, pairs)


# -- families and relations ---------------------------------------------------


def family_to_json(f: DCKFamily) -> dict:
    return {
        "source_graph": f.source_graph.name,
        "ambient_graph": f.ambient_graph.name,
        "omega": {v: cylinder_to_json(s) for v, s in f.omega.items()},
        "t": {e: bisection_to_json(b) for e, b in f.t.items()},
    }


def family_from_json(obj: Mapping, graphs: Mapping[str, DirectedGraph]) -> DCKFamily:
    try:
        src = _graph_ref(obj["source_graph"], graphs)
        amb = _graph_ref(obj["ambient_graph"], graphs)
        scope = {**graphs, amb.name: amb}
        omega = {v: cylinder_from_json(s, scope) for v, s in obj["omega"].items()}
        t = {e: bisection_from_json(b, scope) for e, b in obj["t"].items()}
        return DCKFamily(src, amb, omega, t)
    except SchemaError:
        raise
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise SchemaError(f"malformed family: {exc}") from exc


def relation_to_json(r: RelationMorphism) -> dict:
    r1 = sorted(r.r1, key=lambda p: (p[1], p[0].sort_key()))
    return {
        "source_graph": r.source_graph.name,
        "target_graph": r.target_graph.name,
        "r0": [[u, v] for u, v in sorted(r.r0)],
        "r1": [[path_to_json(x), f] for x, f in r1],
    }


def relation_from_json(obj: Mapping, graphs: Mapping[str, DirectedGraph]) -> RelationMorphism:
    try:
        g1 = _graph_ref(obj["source_graph"], graphs)
        g2 = _graph_ref(obj["target_graph"], graphs)
        r0 = frozenset((str(u), str(v)) for u, v in obj["r0"])
        r1 = frozenset((path_from_json(x, g1), str(f)) for x, f in obj["r1"])
        return RelationMorphism(g1, g2, r0, r1)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed relation: {exc}") from exc


# -- reports ------------------------------------------------------------------


def _value_to_json(v) -> dict | None:
    if isinstance(v, CylinderSet):
        return cylinder_to_json(v)
    if isinstance(v, Bisection):
        return bisection_to_json(v)
    return None


def witness_to_json(w: Witness) -> dict:
    return {"at": list(w.at), "set": _value_to_json(w.value), "note": w.note}


def check_to_json(c: Check) -> dict:
    return {"passed": c.passed, "failures": [witness_to_json(w) for w in c.failures]}


def report_to_json(rep: VerificationReport) -> dict:
    return {
        "accepted": rep.accepted,
        "dck1": check_to_json(rep.dck1),
        "dck2": check_to_json(rep.dck2),
        "dck3": check_to_json(rep.dck3),
        "dck4": check_to_json(rep.dck4),
        "nondegenerate": rep.nondegenerate,
        "compat_531": check_to_json(rep.compat_531),
        "compat_532": check_to_json(rep.compat_532),
    }


def admissibility_to_json(rep: AdmissibilityReport) -> dict:
    out: dict[str, Any] = {"admissible": rep.admissible}
    for c in rep.checks:
        out[c.name] = check_to_json(c)
    out["proper"]["fiber_sizes"] = dict(rep.fiber_sizes)
    return out


# -- files --------------------------------------------------------------------


def load_graphs(path: str | FsPath) -> list[DirectedGraph]:
    """Read one graph or a ``{"graphs": ...}`` collection from a file.

    A bare graph without a ``"name"`` key is named after the file stem.
    """
    path = FsPath(path)
    try:
        obj = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if isinstance(obj, Mapping) and "graphs" in obj:
        coll = obj["graphs"]
        if isinstance(coll, Mapping):
            return [graph_from_json(g, name) for name, g in coll.items()]
        return [graph_from_json(g) for g in coll]
    if not isinstance(obj, Mapping):
        raise SchemaError(f"{path}: expected a JSON object")
    return [graph_from_json(obj, path.stem)]


def load_json(path: str | FsPath) -> Any:
    try:
        return json.loads(FsPath(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
