"""Reference data and the self-check suite behind ``borelorbits verify``.

Every fixture is a function that raises AssertionError with a short
explanation on mismatch and returns a one-line summary otherwise.
"""

from __future__ import annotations

from typing import Callable

from . import orbits_sl, orbits_so, toricdiag
from .exmat import bracket, borel_orbit_dim
from .minimal_orbit import min_orbit_poset, raising_parabolic_min
from .posets import (
    INDUCTION_TABLE,
    FamilySpec,
    build_weak_graph,
    classify_induction,
    f4_o2_fixture,
    find_nonnormal_certificates,
)
from .rootsys import build_root_system, inner_product, long_roots

__all__ = ["FIXTURES", "run_fixtures", "F4_LONG_POSITIVE", "E7_TRIPLES", "TYPE_C22_EDGES"]

F4_LONG_POSITIVE = (
    (2, 4, 3, 2), (2, 4, 3, 1), (2, 4, 2, 1), (2, 2, 2, 1), (2, 2, 1, 1), (0, 2, 2, 1),
    (2, 2, 1, 0), (0, 2, 1, 1), (0, 2, 1, 0), (0, 0, 1, 1), (0, 0, 1, 0), (0, 0, 0, 1),
)

E7_TRIPLES = (
    ((2, 2, 3, 4, 3, 2, 1), (0, 1, 1, 2, 2, 2, 1), (0, 0, 0, 0, 0, 0, 1)),
    ((0, 1, 1, 2, 2, 2, 1), (1, 1, 1, 2, 2, 1, 1), (1, 1, 2, 2, 1, 1, 1)),
)

TYPE_C22_EDGES = {
    ("(1, 1)", "(c2, 1)", 2, "U"),
    ("(1, 1)", "(1, s1)", 1, "N"),
    ("(c2, 1)", "(c1c2, 1)", 1, "U"),
    ("(c1c2, 1)", "(c2c1c2, 1)", 2, "U"),
    ("(c2c1c2, 1)", "(c2c1c2, s1)", 1, "N"),
    ("(1, s1)", "(c2, s1)", 2, "U"),
    ("(c2, s1)", "(c1c2, s1)", 1, "U"),
    ("(c1c2, s1)", "(c2c1c2, s1)", 2, "U"),
}

# closures certified non-normal by the diamond search (with propagation)
BD3_CERTIFIED = {
    5: {"(b2b1, f_2)", "(b1b2b1, f_2)"},
    6: set(),
    7: {"(b3b2b1, f_3)", "(b2b3b2b1, f_3)"},
}

G2_CHAIN = ((3, 2), (3, 1), (0, 1), (0, -1), (-3, -1), (-3, -2))
G2_LABELS = (2, 1, 2, 1, 2)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(msg)


def fx_type_c() -> str:
    g = build_weak_graph(FamilySpec("C", 2, 2))
    got = {(e.src, e.dst, e.parabolic, e.type) for e in g.edges}
    _check(len(g.nodes) == 8, f"expected 8 orbits, got {len(g.nodes)}")
    _check(got == TYPE_C22_EDGES, f"edge set differs: {sorted(got ^ TYPE_C22_EDGES)}")
    certs = sorted(c.certified for c in find_nonnormal_certificates(g))
    _check(certs == ["(c1c2, 1)", "(c2c1c2, 1)"], f"certificates {certs}")
    return "C(2,2): 8 orbits, 8 edges (2 of type N), 2 non-normal closures"


def fx_type_a() -> str:
    ids = orbits_sl.enumerate_A(4, 2)
    _check(len(ids) == 12, f"expected 12 orbits, got {len(ids)}")
    for a in ids:
        for b in ids:
            _check(
                orbits_sl.closure_leq_A(a, b) == orbits_sl.closure_leq_A(a, b, "rank"),
                f"closure criteria disagree on {a}, {b}",
            )
    g = build_weak_graph(FamilySpec("A", 4, 2))
    _check(g.is_minimal_rank(), "type A weak order has a non-U edge")
    dims = sorted(g.dims.values())
    _check(set(dims) == set(range(3, 9)) and dims.count(3) == 1 and dims.count(8) == 1, f"dims {dims}")
    return "A(4,2): 12 orbits, closure criteria agree on 144 pairs"


def fx_dims() -> str:
    count = 0
    for n in range(2, 6):
        for r in range(0, n // 2 + 1):
            for oid in orbits_sl.enumerate_A(n, r):
                x = orbits_sl.representative_A(oid)
                _check(orbits_sl.dim_A(oid) == borel_orbit_dim(x, "sl"), f"dimension mismatch at {oid}")
                count += 1
    return f"type A dimension formula matches the oracle on {count} orbits"


def fx_g2() -> str:
    P = min_orbit_poset("G", 2)
    chain = tuple(r.coeffs for r in P.nodes)
    _check(chain == G2_CHAIN, f"G2 chain {chain}")
    labels = tuple(raising_parabolic_min(r) for r in P.nodes[:-1])
    _check(labels == G2_LABELS, f"G2 labels {labels}")
    return "G2: 6-node chain, labels P2 P1 P2 P1 P2"


def fx_f4_roots() -> str:
    rs = build_root_system("F", 4)
    lr = long_roots(rs)
    _check(len(lr) == 24, f"{len(lr)} long roots")
    pos = {r.coeffs for r in lr if r.is_positive}
    _check(pos == set(F4_LONG_POSITIVE), f"positive long roots differ: {sorted(pos ^ set(F4_LONG_POSITIVE))}")
    _check(len(min_orbit_poset("F", 4).nodes) == 24, "F4 poset size")
    return "F4: 24 long roots, positive ones match the reference list"


def fx_f4_o2() -> str:
    g, expected = f4_o2_fixture()
    certs = find_nonnormal_certificates(g)
    _check(len(g.nodes) == 6, "F4 O2 excerpt size")
    _check(certs == [expected], f"certificates {[str(c) for c in certs]}")
    return f"F4 O2: {expected.certified} non-normal along {expected.Y2}"


def fx_e7() -> str:
    rs = build_root_system("E", 7)
    for triple in E7_TRIPLES:
        roots = [rs.root(c) for c in triple]
        for i in range(3):
            for j in range(i + 1, 3):
                _check(inner_product(rs, roots[i], roots[j]) == 0, f"{roots[i]} not orthogonal to {roots[j]}")
    return "E7: both root triples pairwise orthogonal"


def fx_sl2() -> str:
    for n in (5, 6, 7):
        x, y, h = orbits_so.sl2_triple(n)
        _check(bracket(x, y) == h, f"[x,y] != h for n={n}")
        _check(bracket(h, x) == x * 2, f"[h,x] != 2x for n={n}")
        _check(bracket(h, y) == y * -2, f"[h,y] != -2y for n={n}")
        _check(orbits_so.g2_dimension(n) == n - 2, f"dim g(2) != n-2 for n={n}")
    return "sl2-triples exact for n = 5, 6, 7; dim g(2) = n - 2"


def fx_bd3() -> str:
    for n in (5, 6, 7):
        for oid in orbits_so.enumerate_BD3(n):
            want = 1 if n % 2 and oid.i == n // 2 else 2
            _check(orbits_so.orbit_rank_BD3(oid) == want, f"orbit rank at {oid}")
    for n, want in BD3_CERTIFIED.items():
        certs = {c.certified for c in find_nonnormal_certificates(build_weak_graph(FamilySpec("BD3", n)))}
        _check(certs == want, f"n={n}: certified {sorted(certs)}")
    return "BD3: orbit ranks as expected, certified closures for n = 5, 6, 7 as recorded"


def fx_nonnormal() -> str:
    rep = orbits_so.nonnormal_sample_check(100)
    _check(rep["passed"] == 100, f"{rep['failed']} sample points off the variety")
    return "non-normal example: both polynomials vanish on 100 exact points"


def fx_toric() -> str:
    res = toricdiag.gorenstein_check(toricdiag.RatCone(toricdiag.EXAMPLE_RAYS))
    _check(not res.gorenstein and res.witness is not None, "example cone reported Gorenstein")
    rep = toricdiag.z_variety_check(100)
    _check(rep["passed"] == 100, f"torus check {rep}")
    _check(
        toricdiag.dual_cone_rays(toricdiag.EXAMPLE_CHARACTERS) == sorted(toricdiag.EXAMPLE_RAYS),
        "cone from torus characters differs",
    )
    return f"toric: not Gorenstein (witness {list(res.witness)}), 100/100 torus points"


def fx_table() -> str:
    probes = [("A", 7, 4), ("B", 5, 1), ("C", 4, 4), ("D", 5, 1), ("D", 8, 8), ("E", 7, 7)]
    got = [classify_induction(*p).case_no for p in probes]
    _check(got == [1, 2, 3, 4, 5, 6], f"cases {got}")
    for bad in [("A", 5, 2), ("D", 5, 5), ("E", 6, 6), ("E", 6, 1)]:
        try:
            classify_induction(*bad)
        except ValueError:
            continue
        raise AssertionError(f"{bad} was not rejected")
    _check(len(INDUCTION_TABLE) == 6, "table size")
    return "induction table: six rows, excluded pairs rejected"


FIXTURES: dict[str, Callable[[], str]] = {
    "typeC": fx_type_c,
    "typeA": fx_type_a,
    "dims": fx_dims,
    "g2": fx_g2,
    "f4-roots": fx_f4_roots,
    "f4-o2": fx_f4_o2,
    "e7": fx_e7,
    "sl2": fx_sl2,
    "bd3": fx_bd3,
    "nonnormal": fx_nonnormal,
    "toric": fx_toric,
    "table": fx_table,
}


def run_fixtures(only: list[str] | None = None) -> list[tuple[str, bool, str]]:
    names = list(FIXTURES) if not only else only
    out = []
    for name in names:
        if name not in FIXTURES:
            raise KeyError(name)
        try:
            out.append((name, True, FIXTURES[name]()))
        except AssertionError as exc:
            out.append((name, False, str(exc)))
    return out
