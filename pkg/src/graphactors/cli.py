"""Command-line front end.

Exit codes: 0 success, 1 a verification or precondition failed, 2 malformed
or unresolvable input.  Reports and artifacts go to stdout (or ``--out``),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from . import serialize as S
from .actors import CompositionError, compose_families, identity_family, search_inverse, verify_inverse
from .crosscheck import cross_check
from .families import verify_family
from .graph import DirectedGraph, GraphError
from .oracle import boundary_paths, materialize_groupoid
from .relations import (
    AdmissibilityError,
    PreconditionError,
    check_admissible,
    family_to_relation,
    relation_to_family,
    validate_relation,
)
from .shift import GraphMismatch


class InputError(Exception):
    pass


@dataclass
class Workspace:
    graphs: dict[str, DirectedGraph] = field(default_factory=dict)

    @classmethod
    def load(cls, files: list[str]) -> Workspace:
        ws = cls()
        for f in files or []:
            for g in S.load_graphs(f):
                if g.name in ws.graphs and ws.graphs[g.name] != g:
                    raise InputError(f"graph {g.name!r} defined twice with different contents")
                ws.graphs[g.name] = g
        return ws

    def family(self, path: str):
        return S.family_from_json(S.load_json(path), self.graphs)

    def relation(self, path: str):
        return S.relation_from_json(S.load_json(path), self.graphs)


def _emit(args, obj) -> None:
    text = S.dumps(obj)
    if getattr(args, "out", None):
        FsPath(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _err(msg: str) -> None:
    print(f"graphactors: {msg}", file=sys.stderr)


def _one(items, what: str, n: int = 1):
    if not items or len(items) != n:
        raise InputError(f"expected exactly {n} {what} argument(s)")
    return items if n > 1 else items[0]


def cmd_check_family(args, ws: Workspace) -> int:
    fam = ws.family(_one(args.family, "--family"))
    rep = verify_family(fam)
    _emit(args, rep.to_json())
    return 0 if rep.accepted else 1


def cmd_check_relation(args, ws: Workspace) -> int:
    rel = ws.relation(args.relation)
    problems = validate_relation(rel)
    if problems:
        _emit(args, {"valid": False, "problems": problems})
        _err("not a relation morphism")
        return 1
    rep = check_admissible(rel)
    _emit(args, {"valid": True, **rep.to_json()})
    if not rep.admissible:
        _err("not admissible: " + ", ".join(rep.failed))
        return 1
    return 0


def cmd_from_relation(args, ws: Workspace) -> int:
    rel = ws.relation(args.relation)
    problems = validate_relation(rel)
    if problems:
        _emit(args, {"error": "not a relation morphism", "problems": problems})
        return 1
    try:
        fam = relation_to_family(rel)
    except AdmissibilityError as exc:
        out = {"error": "relation is not admissible", "failed": exc.report.failed, "report": exc.report.to_json()}
        _emit(args, out)
        _err(str(exc))
        return 1
    _emit(args, S.family_to_json(fam))
    return 0


def cmd_to_relation(args, ws: Workspace) -> int:
    fam = ws.family(_one(args.family, "--family"))
    try:
        rel = family_to_relation(fam)
    except PreconditionError as exc:
        out = {
            "error": "precondition failed",
            "condition": exc.condition,
            "witness": S.witness_to_json(exc.witness),
        }
        _emit(args, out)
        _err(str(exc))
        return 1
    _emit(args, S.relation_to_json(rel))
    return 0


def cmd_compose(args, ws: Workspace) -> int:
    inner, outer = (ws.family(p) for p in _one(args.family, "--family", 2))
    try:
        fam = compose_families(inner, outer)
    except GraphMismatch as exc:
        raise InputError(str(exc)) from exc
    except CompositionError as exc:
        _err(str(exc))
        return 1
    _emit(args, S.family_to_json(fam))
    return 0


def cmd_identity(args, ws: Workspace) -> int:
    name = args.graph_opt or args.graph
    if name is None:
        if len(ws.graphs) != 1:
            raise InputError("name the graph when several are loaded")
        (name,) = ws.graphs
    if name not in ws.graphs:
        raise InputError(f"unknown graph {name!r}")
    _emit(args, S.family_to_json(identity_family(ws.graphs[name])))
    return 0


def cmd_verify_inverse(args, ws: Workspace) -> int:
    f, g = (ws.family(p) for p in _one(args.family, "--family", 2))
    rep = verify_inverse(f, g)
    _emit(args, rep.to_json())
    if rep.note:
        _err(rep.note)
    return 0 if rep.inverse else 1


def cmd_search_inverse(args, ws: Workspace) -> int:
    fam = ws.family(_one(args.family, "--family"))
    try:
        found = search_inverse(fam, args.max_len)
    except CompositionError as exc:
        _err(str(exc))
        return 1
    if found is None:
        _emit(args, {"found": False, "max_len": args.max_len})
        return 1
    _emit(args, S.family_to_json(found))
    return 0


def cmd_oracle_check(args, ws: Workspace) -> int:
    bad = cross_check(args.seed, args.cases)
    _emit(args, {"seed": args.seed, "cases": args.cases, "discrepancies": bad})
    return 1 if bad else 0


def cmd_info(args, ws: Workspace) -> int:
    out = {}
    for name, g in sorted(ws.graphs.items()):
        entry = {
            "vertices": len(g.vertices),
            "edges": len(g.edges),
            "regular": sorted(g.regular_vertices),
            "singular": sorted(g.singular_vertices),
            "acyclic": g.is_acyclic,
        }
        if g.is_acyclic:
            entry["boundary_paths"] = len(boundary_paths(g))
            entry["groupoid_arrows"] = len(materialize_groupoid(g))
        out[name] = entry
    _emit(args, out)
    return 0


COMMANDS = {
    "check-family": cmd_check_family,
    "check-relation": cmd_check_relation,
    "from-relation": cmd_from_relation,
    "to-relation": cmd_to_relation,
    "compose": cmd_compose,
    "identity": cmd_identity,
    "verify-inverse": cmd_verify_inverse,
    "search-inverse": cmd_search_inverse,
    "oracle-check": cmd_oracle_check,
    "info": cmd_info,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graphs", nargs="+", action="extend", default=[], metavar="FILE")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--json", action="store_true", help="JSON output (the default and only mode)")

    p = argparse.ArgumentParser(prog="graphactors", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check-family", "to-relation", "search-inverse"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--family", action="append", required=True, metavar="FILE")
        if name == "search-inverse":
            sp.add_argument("--max-len", type=int, default=2)
    for name in ("compose", "verify-inverse"):
        sp = sub.add_parser(name, parents=[common], help="give --family twice: inner/first, then outer/second")
        sp.add_argument("--family", action="append", required=True, metavar="FILE")
    for name in ("check-relation", "from-relation"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--relation", required=True, metavar="FILE")
    sp = sub.add_parser("identity", parents=[common])
    sp.add_argument("graph", nargs="?", help="graph name (put it before --graphs, or use --graph)")
    sp.add_argument("--graph", dest="graph_opt", metavar="NAME")
    sp = sub.add_parser("oracle-check", parents=[common])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=500)
    sub.add_parser("info", parents=[common])
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        ws = Workspace.load(args.graphs)
        return COMMANDS[args.command](args, ws)
    except (InputError, S.SchemaError, GraphError, GraphMismatch) as exc:
        _err(str(exc))
        return 2
    except ValueError as exc:
        _err(f"invalid input: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
