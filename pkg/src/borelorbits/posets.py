"""Typed weak-order graphs, non-normality certificates and the induction table.

A weak-order graph has the B-orbits as nodes and an edge Y -> PY for every
minimal parabolic P raising Y, tagged with the shape of the raising:
U (birational, two orbits), N (degree two, two orbits) or T (birational,
three orbits).

Certificates.  If P_a raises Y to Y1 with type U or T, P_b raises Y to Y2
with type N and P_b raises Y1 to Y3 with type U or T, then the closure of
Y3 is not normal along Y2.  A certificate is also pushed upward: when the
closure of Y3 is non-normal along Y2, P raises Y3 to Y3' with type U or T
and P.Y2 is not contained in the closure of Y3, then P x^B cl(Y3) -> cl(Y3')
is birational with finite fibres over Y2, so cl(Y3') is non-normal along
Y2 as well.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import minimal_orbit as mo
from . import orbits_sl, orbits_so, orbits_sp
from .rootsys import Root, build_root_system, inner_product

__all__ = [
    "FamilySpec",
    "Edge",
    "TypedWeakGraph",
    "Certificate",
    "InductionCase",
    "INDUCTION_TABLE",
    "build_weak_graph",
    "find_nonnormal_certificates",
    "raising_sequence",
    "classify_induction",
    "f4_o2_fixture",
    "closure_relation",
    "enumerate_family",
]

EDGE_TYPES = ("U", "N", "T")


@dataclass(frozen=True)
class FamilySpec:
    """Which orbit family to build: A, C, BD2, BD3, min or F4O2."""

    family: str
    n: int | None = None
    r: int | None = None
    s: int | None = None
    type_label: str | None = None

    def __post_init__(self):
        f = self.family
        need = {"A": ("n", "r"), "C": ("n", "r"), "BD2": ("n", "s"), "BD3": ("n",), "min": ("type_label",)}
        if f not in need and f != "F4O2":
            raise ValueError(f"unknown family {f!r}")
        for attr in need.get(f, ()):
            if getattr(self, attr) is None:
                raise ValueError(f"family {f} needs --{attr.replace('type_label', 'type')}")
        n, r, s = self.n, self.r, self.s
        if f == "A" and not (n >= 2 and 0 <= r and 2 * r <= n):
            raise ValueError("family A needs n >= 2 and 0 <= 2r <= n")
        if f == "C" and not (1 <= r <= n):
            raise ValueError("family C needs 1 <= r <= n")
        if f == "BD2" and not (s >= 1 and 4 * s <= n):
            raise ValueError("family BD2 needs s >= 1 and 4s <= n")
        if f == "BD3" and n < 4:
            raise ValueError("family BD3 needs n >= 4")

    @property
    def name(self) -> str:
        parts = {
            "A": f"A n={self.n} r={self.r}",
            "C": f"C n={self.n} r={self.r}",
            "BD2": f"BD2 n={self.n} s={self.s}",
            "BD3": f"BD3 n={self.n}",
            "min": f"min {self.type_label}",
            "F4O2": "F4 O2 excerpt",
        }
        return parts[self.family]


@dataclass(frozen=True, order=True)
class Edge:
    src: str
    dst: str
    parabolic: int
    type: str


@dataclass
class TypedWeakGraph:
    name: str
    nodes: list[str]
    dims: dict[str, int]
    edges: list[Edge]
    objects: dict[str, object] = field(default_factory=dict)
    closure_leq: Callable[[str, str], bool] | None = None
    fragment: bool = False

    def out_edges(self, node: str) -> list[Edge]:
        return [e for e in self.edges if e.src == node]

    def sources(self) -> list[str]:
        has_in = {e.dst for e in self.edges}
        return [v for v in self.nodes if v not in has_in]

    def sinks(self) -> list[str]:
        has_out = {e.src for e in self.edges}
        return [v for v in self.nodes if v not in has_out]

    def is_minimal_rank(self) -> bool:
        return all(e.type == "U" for e in self.edges)

    def validate(self) -> None:
        names = set(self.nodes)
        if len(names) != len(self.nodes):
            raise ValueError(f"{self.name}: duplicate node labels")
        for e in self.edges:
            if e.src not in names or e.dst not in names:
                raise ValueError(f"{self.name}: edge {e} leaves the graph")
            if e.type not in EDGE_TYPES:
                raise ValueError(f"{self.name}: bad edge type in {e}")
            if self.dims[e.dst] != self.dims[e.src] + 1:
                raise ValueError(f"{self.name}: edge {e} does not raise dimension by one")
        if not self.fragment:
            # one G-orbit per connected component (two in the very even case)
            sinks, sources = set(self.sinks()), set(self.sources())
            for comp in self.components():
                if len(comp & sinks) != 1:
                    raise ValueError(f"{self.name}: expected a unique dense orbit, got {sorted(comp & sinks)}")
                if len(comp & sources) != 1:
                    raise ValueError(f"{self.name}: expected a unique minimal orbit, got {sorted(comp & sources)}")

    def components(self) -> list[set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for e in self.edges:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
        seen: set[str] = set()
        out = []
        for v in self.nodes:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for u in adj[stack.pop()]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            out.append(comp)
        return out

    def leq(self, a: str, b: str) -> bool:
        """Closure containment when known exactly, else None-safe fallback to
        reachability in the weak order (a lower bound for the closure order)."""
        if self.closure_leq is not None:
            return self.closure_leq(a, b)
        return a in self._reach(b)

    def _reach(self, b: str) -> set[str]:
        cache = self.__dict__.setdefault("_below", {})
        if b not in cache:
            seen = {b}
            stack = [b]
            rev: dict[str, list[str]] = self.__dict__.setdefault("_rev", {})
            if not rev:
                for e in self.edges:
                    rev.setdefault(e.dst, []).append(e.src)
            while stack:
                v = stack.pop()
                for u in rev.get(v, []):
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            cache[b] = seen
        return cache[b]

    def sorted_nodes(self) -> list[str]:
        index = {v: i for i, v in enumerate(self.nodes)}
        return sorted(self.nodes, key=lambda v: (self.dims[v], index[v]))

    def to_json(self, certificates: Iterable[Certificate] | None = None) -> dict:
        nodes = []
        for v in self.sorted_nodes():
            item = {"id": v, "dim": self.dims[v]}
            obj = self.objects.get(v)
            if obj is not None and hasattr(obj, "to_json"):
                item["key"] = obj.to_json()
            nodes.append(item)
        return {
            "family": self.name,
            "nodes": nodes,
            "edges": [
                {"src": e.src, "dst": e.dst, "parabolic": e.parabolic, "type": e.type}
                for e in self.edges
            ],
            "certificates": [c.to_json() for c in (certificates or [])],
        }

    def to_dot(self) -> str:
        ids = {v: f"n{i}" for i, v in enumerate(self.sorted_nodes())}
        lines = [f'digraph "{self.name}" {{', "  rankdir=TB;", "  node [shape=box];"]
        for v in self.sorted_nodes():
            lines.append(f'  {ids[v]} [label="{v}\\ndim {self.dims[v]}"];')
        for e in self.edges:
            style = {
                "U": "",
                "N": ', color="black:invis:black"',
                "T": ", style=dashed",
            }[e.type]
            lines.append(f'  {ids[e.src]} -> {ids[e.dst]} [label="P{e.parabolic}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> TypedWeakGraph:
        nodes = [n["id"] for n in data["nodes"]]
        dims = {n["id"]: n["dim"] for n in data["nodes"]}
        edges = [Edge(e["src"], e["dst"], e["parabolic"], e["type"]) for e in data["edges"]]
        return cls(data.get("family", "graph"), nodes, dims, edges, fragment=True)


@dataclass(frozen=True)
class Certificate:
    """A diamond (Y, Y1, Y2, Y3; P1, P2) plus upward lifts of Y3.

    The certified orbit is the last lift target, or Y3 if there is none; its
    closure is not normal along Y2.
    """

    Y: str
    Y1: str
    Y2: str
    Y3: str
    P1: int
    P2: int
    lift: tuple[tuple[int, str], ...] = ()

    @property
    def certified(self) -> str:
        return self.lift[-1][1] if self.lift else self.Y3

    def to_json(self) -> dict:
        return {
            "nonnormal": self.certified,
            "along": self.Y2,
            "Y": self.Y,
            "Y1": self.Y1,
            "Y2": self.Y2,
            "Y3": self.Y3,
            "P1": self.P1,
            "P2": self.P2,
            "lift": [{"parabolic": p, "node": v} for p, v in self.lift],
        }

    def __str__(self) -> str:
        s = (
            f"closure of {self.certified} is not normal along {self.Y2}: "
            f"{self.Y} -P{self.P1}-> {self.Y1}, {self.Y} =P{self.P2}=> {self.Y2}, "
            f"{self.Y1} -P{self.P2}-> {self.Y3}"
        )
        for p, v in self.lift:
            s += f", then P{p} -> {v}"
        return s


def find_nonnormal_certificates(g: TypedWeakGraph, propagate: bool = True) -> list[Certificate]:
    out: dict[str, Certificate] = {}
    by_src: dict[str, list[Edge]] = {}
    for e in g.edges:
        by_src.setdefault(e.src, []).append(e)
    queue: deque[Certificate] = deque()
    for y in g.sorted_nodes():
        edges = by_src.get(y, [])
        for e2 in (e for e in edges if e.type == "N"):
            for e1 in (e for e in edges if e.type in "UT" and e.parabolic != e2.parabolic):
                for e3 in by_src.get(e1.dst, []):
                    if e3.parabolic == e2.parabolic and e3.type in "UT":
                        c = Certificate(y, e1.dst, e2.dst, e3.dst, e1.parabolic, e2.parabolic)
                        if c.certified not in out:
                            out[c.certified] = c
                            queue.append(c)
    while propagate and queue:
        c = queue.popleft()
        y3, y2 = c.certified, c.Y2
        for e in by_src.get(y3, []):
            if e.type not in "UT":
                continue
            raised = [f.dst for f in by_src.get(y2, []) if f.parabolic == e.parabolic]
            if not raised or not all(_not_in_closure(g, t, y3) for t in raised):
                continue
            new = Certificate(c.Y, c.Y1, c.Y2, c.Y3, c.P1, c.P2, c.lift + ((e.parabolic, e.dst),))
            if new.certified not in out:
                out[new.certified] = new
                queue.append(new)
    return sorted(out.values(), key=lambda c: (g.dims[c.certified], g.nodes.index(c.certified)))


def _not_in_closure(g: TypedWeakGraph, a: str, b: str) -> bool:
    if g.closure_leq is not None:
        return not g.closure_leq(a, b)
    # without an exact closure order only the dimension argument is safe
    return a != b and g.dims[a] >= g.dims[b]


def raising_sequence(g: TypedWeakGraph, node: str) -> list[int]:
    sources = g.sources()
    if node not in g.dims:
        raise KeyError(node)
    start = [v for v in sources if v == node or node in _descendants(g, v)]
    if not start:
        raise ValueError(f"{node} is not reachable from a minimal orbit: graph defect")
    src = start[0]
    prev: dict[str, tuple[str, int] | None] = {src: None}
    q = deque([src])
    while q:
        v = q.popleft()
        if v == node:
            break
        for e in sorted(g.out_edges(v), key=lambda e: (e.type != "U", e.parabolic, e.dst)):
            if e.dst not in prev:
                prev[e.dst] = (v, e.parabolic)
                q.append(e.dst)
    seq = []
    v = node
    while prev[v] is not None:
        u, p = prev[v]
        seq.append(p)
        v = u
    return seq[::-1]


def _descendants(g: TypedWeakGraph, v: str) -> set[str]:
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for e in g.out_edges(u):
            if e.dst not in seen:
                seen.add(e.dst)
                stack.append(e.dst)
    return seen


# -- building graphs for each family ---------------------------------------


def enumerate_family(spec: FamilySpec) -> list:
    f = spec.family
    if f == "A":
        return list(orbits_sl.enumerate_A(spec.n, spec.r))
    if f == "C":
        return list(orbits_sp.enumerate_C(spec.n, spec.r))
    if f == "BD2":
        return list(orbits_so.enumerate_BD2(spec.n, spec.s))
    if f == "BD3":
        return list(orbits_so.enumerate_BD3(spec.n))
    if f == "min":
        kind, rank = _type(spec.type_label)
        return list(mo.min_orbit_poset(kind, rank).nodes)
    if f == "F4O2":
        return list(f4_o2_fixture()[0].nodes)
    raise ValueError(f"unknown family {f!r}")


def _type(label: str) -> tuple[str, int]:
    from .rootsys import parse_type

    return parse_type(label)


def _dim(spec: FamilySpec, oid) -> int:
    f = spec.family
    if f == "A":
        return orbits_sl.dim_A(oid)
    if f == "C":
        return orbits_sp.dim_C(oid)
    return orbits_so.dim_BD(oid)


def _covers(spec: FamilySpec, oid, validate: bool):
    f = spec.family
    if f == "A":
        return orbits_sl.weak_covers_A(oid, validate)
    if f == "C":
        return orbits_sp.weak_covers_C(oid, validate)
    return orbits_so.weak_covers_BD(oid, validate)


def build_weak_graph(spec: FamilySpec, validate: bool = True) -> TypedWeakGraph:
    if spec.family == "min":
        return _min_graph(spec)
    if spec.family == "F4O2":
        return f4_o2_fixture()[0]
    ids = enumerate_family(spec)
    labels = [str(o) for o in ids]
    objects = dict(zip(labels, ids))
    dims = {str(o): _dim(spec, o) for o in ids}
    edges = []
    for o in ids:
        for k, t, kind in _covers(spec, o, validate):
            edges.append(Edge(str(o), str(t), k, kind))
    g = TypedWeakGraph(spec.name, labels, dims, edges, objects)
    rel = closure_relation(spec)
    if rel is not None:
        g.closure_leq = lambda a, b: rel(objects[a], objects[b])
    if validate:
        g.validate()
    return g


def closure_relation(spec: FamilySpec):
    """An exact closure-order predicate on orbit ids, or None when the
    family has no closure criterion (the orthogonal families)."""
    if spec.family == "A":
        return orbits_sl.closure_leq_A
    if spec.family == "C":
        return orbits_sp.closure_leq_C
    if spec.family == "min":
        kind, rank = _type(spec.type_label)
        return mo.min_orbit_poset(kind, rank).leq
    return None


def _min_graph(spec: FamilySpec) -> TypedWeakGraph:
    kind, rank = _type(spec.type_label)
    P = mo.min_orbit_poset(kind, rank)
    labels = [str(v) for v in P.nodes]
    objects = dict(zip(labels, P.nodes))
    dims = {str(v): d for v, d in zip(P.nodes, P.dims)}
    edges = [Edge(str(a), str(b), i, "U") for a, b, i in mo.min_orbit_weak_edges(P.rs)]
    g = TypedWeakGraph(spec.name, labels, dims, edges, objects)
    g.closure_leq = lambda a, b: P.leq(objects[a], objects[b])
    g.validate()
    return g


# -- pairs (G_E, P_E) for height-two orbits ------------------------------------------------------------------


@dataclass(frozen=True)
class InductionCase:
    case_no: int
    G_E: str
    P_E: str
    L: str
    g2_description: str
    centralizer: str
    params: tuple[tuple[str, int], ...] = ()

    def row(self) -> tuple[int, str, str, str, str, str]:
        return (self.case_no, self.G_E, self.P_E, self.L, self.g2_description, self.centralizer)

    def to_json(self) -> dict:
        return {
            "case": self.case_no,
            "G_E": self.G_E,
            "P_E": self.P_E,
            "L": self.L,
            "g(2)": self.g2_description,
            "C_L(x)": self.centralizer,
            "params": dict(self.params),
        }


INDUCTION_TABLE = (
    InductionCase(1, "A_{2n-1}", "P_n", "A_{n-1} x A_{n-1}", "M_n(k)", "A_{n-1}"),
    InductionCase(2, "B_n", "P_1", "B_{n-1}", "k^{2n-1}", "B_{n-2}"),
    InductionCase(3, "C_n", "P_n", "A_{n-1}", "M^s_n(k)", "B_{(n-1)/2} or D_{n/2}"),
    InductionCase(4, "D_n", "P_1", "D_{n-1}", "k^{2n-2}", "D_{n-2}"),
    InductionCase(5, "D_{2n}", "P_{2n}", "A_{2n-1}", "M^a_{2n}(k)", "C_n"),
    InductionCase(6, "E_7", "P_7", "E_6", "k^{27}", "F_4"),
)


def classify_induction(kind: str, rank: int, parabolic: int) -> InductionCase:
    """The table row for (G_E, P_E) = (kind_rank, P_parabolic), Bourbaki
    numbering, up to diagram automorphisms.  Raises ValueError for pairs
    that cannot arise from a height-two orbit."""
    kind = kind.upper()
    build_root_system(kind, rank)  # validates the type
    m = parabolic
    if not 1 <= m <= rank:
        raise ValueError(f"P_{m} is not a maximal parabolic of {kind}{rank}")

    def hit(i: int, **params) -> InductionCase:
        row = INDUCTION_TABLE[i - 1]
        return InductionCase(*row.row(), params=tuple(sorted(params.items())))

    if kind == "A":
        if 2 * m == rank + 1:
            return hit(1, n=m)
        raise ValueError(f"(A_{rank}, P_{m}) does not occur: m != {rank + 1} - m")
    if kind == "B" and m == 1:
        return hit(2, n=rank)
    if kind == "C" and m == rank:
        return hit(3, n=rank)
    if kind == "D":
        if m == 1:
            return hit(4, n=rank)
        if m in (rank - 1, rank):
            if rank % 2 == 0:
                return hit(5, n=rank // 2)
            raise ValueError(f"(D_{rank}, P_{m}) with {rank} odd does not occur")
    if kind == "E" and rank == 6 and m in (1, 6):
        raise ValueError(f"(E_6, P_{m}) does not occur")
    if kind == "E" and rank == 7 and m == 7:
        return hit(6)
    raise ValueError(f"({kind}_{rank}, P_{m}) is not one of the six induction pairs")


# -- F4, the orbit O_2 --------------------------------------------------------

F4_O2_NODES = (
    ("X(2321)", ((2, 3, 2, 1),), 4),
    ("X(2421)+X(2221)", ((2, 4, 2, 1), (2, 2, 2, 1)), 5),
    ("X(1321)", ((1, 3, 2, 1),), 5),
    ("X(2431)+X(2211)", ((2, 4, 3, 1), (2, 2, 1, 1)), 6),
    ("X(1221)", ((1, 2, 2, 1),), 6),
    ("X(2432)+X(2210)", ((2, 4, 3, 2), (2, 2, 1, 0)), 7),
)

F4_O2_EDGES = (
    ("X(2321)", "X(2421)+X(2221)", 2, "N"),
    ("X(2321)", "X(1321)", 1, "U"),
    ("X(2421)+X(2221)", "X(2431)+X(2211)", 3, "U"),
    ("X(1321)", "X(1221)", 2, "U"),
    ("X(2431)+X(2211)", "X(2432)+X(2210)", 4, "U"),
)

F4_O2_EXPECTED = Certificate("X(2321)", "X(1321)", "X(2421)+X(2221)", "X(1221)", 1, 2)


def f4_o2_fixture() -> tuple[TypedWeakGraph, Certificate]:
    """The six-node excerpt of the weak order for F4 on O_2, checked
    against the F4 root system, with its expected certificate."""
    rs = build_root_system("F", 4)
    roots = {}
    for label, coeffs, _ in F4_O2_NODES:
        roots[label] = [rs.root(c) for c in coeffs]
        for a in roots[label]:
            for b in roots[label]:
                if a != b and inner_product(rs, a, b) != 0:
                    raise ValueError(f"{label}: summands are not orthogonal")
    for src, dst, i, kind in F4_O2_EDGES:
        (rho, *rest) = roots[src]
        if kind == "N":
            alpha = rs.simple_root(i)
            ok = not rest and rs.pairing(rho, i) == 0 and set(roots[dst]) == {rho + alpha, rho - alpha}
        else:
            moved = {rs.reflect(r, i) for r in roots[src]}
            ok = moved == set(roots[dst]) and moved != set(roots[src])
        if not ok:
            raise ValueError(f"F4 fixture edge {src} -> {dst} via P{i} is inconsistent")
    labels = [lab for lab, _, _ in F4_O2_NODES]
    g = TypedWeakGraph(
        "F4 O2 excerpt",
        labels,
        {lab: d for lab, _, d in F4_O2_NODES},
        [Edge(*e) for e in F4_O2_EDGES],
        objects={lab: tuple(roots[lab]) for lab in labels},
        fragment=True,
    )
    g.validate()
    return g, F4_O2_EXPECTED
