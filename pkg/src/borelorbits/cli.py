"""Command-line interface: enumerate orbits, export weak and closure graphs,
search for non-normality certificates, run the self-checks and look up the
induction table.

Data goes to stdout (or --out), counts and banners to stderr.  Exit codes:
0 success, 1 a fixture or validator failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import orbits_sl, orbits_so, orbits_sp
from .fixtures import FIXTURES, run_fixtures
from .posets import (
    F4_O2_NODES,
    INDUCTION_TABLE,
    FamilySpec,
    TypedWeakGraph,
    build_weak_graph,
    classify_induction,
    find_nonnormal_certificates,
)
from .rootsys import build_root_system, parse_type

FAMILIES = ("A", "C", "BD2", "BD3", "min", "F4O2")
NO_OBSTRUCTION = "no obstruction found (not a normality proof)"
LOWER_BOUND = "weak-order lower bound only: no closure criterion for the orthogonal families"


class UsageError(Exception):
    pass


def _spec_from_args(args) -> FamilySpec:
    if args.family is None:
        raise UsageError("--family is required")
    try:
        return FamilySpec(args.family, n=args.n, r=args.r, s=args.s, type_label=args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _spec_json(spec: FamilySpec) -> dict:
    out = {"family": spec.family}
    for key in ("n", "r", "s"):
        if getattr(spec, key) is not None:
            out[key] = getattr(spec, key)
    if spec.type_label is not None:
        out["type"] = spec.type_label
    return out


def _spec_from_json(data: dict) -> FamilySpec:
    try:
        return FamilySpec(
            data["family"], n=data.get("n"), r=data.get("r"), s=data.get("s"), type_label=data.get("type")
        )
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad family in input file: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- enumerate --------------------------------------------------------------


def _representative(spec: FamilySpec, oid):
    f = spec.family
    if f == "A":
        return orbits_sl.representative_A(oid)
    if f == "C":
        return orbits_sp.representative_C(oid)
    if f == "BD2":
        return orbits_so.representative_BD2(oid)
    if f == "BD3":
        return orbits_so.representative_BD3(oid)
    return None


def cmd_enumerate(args) -> int:
    spec = _spec_from_args(args)
    g = build_weak_graph(spec, validate=False)
    orbits = []
    for label in g.sorted_nodes():
        item = {"id": label, "dim": g.dims[label]}
        obj = g.objects.get(label)
        if obj is not None and hasattr(obj, "to_json"):
            item["key"] = obj.to_json()
        if spec.family in ("A", "C", "BD2", "BD3"):
            item["representative"] = _representative(spec, obj).to_json()
        if spec.family == "A":
            item["link_pattern"] = [list(a) for a in orbits_sl.link_pattern_A(obj)]
        orbits.append(item)
    if spec.family == "F4O2":
        roots = {label: coeffs for label, coeffs, _ in F4_O2_NODES}
        for item in orbits:
            item["key"] = [list(c) for c in roots[item["id"]]]
    _log(f"{spec.name}: {len(orbits)} orbits")
    _emit(_dump({"spec": _spec_json(spec), "count": len(orbits), "orbits": orbits}), args.out)
    return 0


# -- graph ------------------------------------------------------------------


def _load_graph(path: str) -> tuple[TypedWeakGraph, FamilySpec | None]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    if "spec" in data:
        spec = _spec_from_json(data["spec"])
        return build_weak_graph(spec), spec
    if "nodes" in data and "edges" in data:
        return TypedWeakGraph.from_json(data), None
    raise UsageError(f"{path} is neither enumerate nor graph output")


def _closure_json(g: TypedWeakGraph, exact: bool) -> dict:
    nodes = g.sorted_nodes()
    return {
        "family": g.name,
        "exact": exact,
        "nodes": [{"id": v, "dim": g.dims[v]} for v in nodes],
        "leq": [[int(g.leq(a, b)) for b in nodes] for a in nodes],
    }


def _closure_dot(g: TypedWeakGraph, exact: bool) -> str:
    nodes = g.sorted_nodes()
    ids = {v: f"n{i}" for i, v in enumerate(nodes)}
    below = {b: [a for a in nodes if a != b and g.leq(a, b)] for b in nodes}
    lines = [f'digraph "{g.name} closure" {{', "  rankdir=TB;", "  node [shape=box];"]
    if not exact:
        lines.append('  label="weak-order lower bound only";')
    for v in nodes:
        lines.append(f'  {ids[v]} [label="{v}\\ndim {g.dims[v]}"];')
    for b in nodes:
        for a in below[b]:
            if not any(c != a and g.leq(a, c) for c in below[b]):
                lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    if args.source:
        g, spec = _load_graph(args.source)
    else:
        spec = _spec_from_args(args)
        g = build_weak_graph(spec)
    _log(f"{g.name}: {len(g.nodes)} nodes, {len(g.edges)} edges")
    if args.kind == "weak":
        text = g.to_dot() if args.format == "dot" else _dump(g.to_json())
    else:
        exact = g.closure_leq is not None
        if not exact:
            _log(LOWER_BOUND)
        text = _closure_dot(g, exact) if args.format == "dot" else _dump(_closure_json(g, exact))
    _emit(text, args.out)
    return 0


# -- check-normality ----------------------------------------------------------


def cmd_check_normality(args) -> int:
    spec = _spec_from_args(args)
    g = build_weak_graph(spec)
    certs = find_nonnormal_certificates(g, propagate=not args.no_propagate)
    _log(f"{g.name}: {len(g.nodes)} nodes, {len(certs)} certificates")
    if not certs:
        _log(NO_OBSTRUCTION)
    out = {"family": g.name, "certificates": [c.to_json() for c in certs]}
    if not certs:
        out["message"] = NO_OBSTRUCTION
    _emit(_dump(out), args.out)
    return 0


# -- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    only = args.only or None
    if only:
        unknown = [n for n in only if n not in FIXTURES]
        if unknown:
            raise UsageError(f"unknown fixture(s) {', '.join(unknown)}; choose from {', '.join(FIXTURES)}")
    results = run_fixtures(only)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in results]
    failed = [name for name, ok, _ in results if not ok]
    lines.append(f"{len(results) - len(failed)}/{len(results)} fixtures passed")
    _emit("\n".join(lines) + "\n", args.out)
    if failed:
        _log(f"failed: {', '.join(failed)}")
        return 1
    return 0


# -- classify -------------------------------------------------------------------


def cmd_classify(args) -> int:
    if args.all:
        _emit(_dump([row.to_json() for row in INDUCTION_TABLE]), args.out)
        return 0
    if args.type is None or args.parabolic is None:
        raise UsageError("classify needs --type and --parabolic (or --all)")
    try:
        kind, rank = parse_type(args.type)
        build_root_system(kind, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        case = classify_induction(kind, rank, args.parabolic)
    except ValueError as exc:
        _log(str(exc))
        _emit(_dump({"type": args.type, "parabolic": args.parabolic, "case": None, "reason": str(exc)}), args.out)
        return 1
    _emit(_dump(case.to_json()), args.out)
    return 0


# -- parser ---------------------------------------------------------------------


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--type", help="root system label for --family min, e.g. G2 or F4")
    p.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelorbits",
        description="B-orbits in height-two spherical nilpotent orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the orbits of a family as JSON")
    _family_flags(p)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="export the weak order or the closure order")
    _family_flags(p)
    p.add_argument("--kind", choices=("weak", "closure"), default="weak")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--from", dest="source", help="enumerate or graph JSON to read instead of --family")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("check-normality", help="search the weak order for non-normality certificates")
    _family_flags(p)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--no-propagate", action="store_true", help="report base diamonds only")
    p.set_defaults(func=cmd_check_normality)

    p = sub.add_parser("verify", help="run the built-in reference checks")
    p.add_argument("--only", action="append", metavar="NAME", help=f"one of: {', '.join(FIXTURES)}")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="look up (G_E, P_E) in the induction table")
    p.add_argument("--type", help="e.g. D8")
    p.add_argument("--parabolic", type=int)
    p.add_argument("--all", action="store_true", help="print the whole table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
