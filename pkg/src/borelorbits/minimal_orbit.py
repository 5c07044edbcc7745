"""B-orbits in the minimal nilpotent orbit, indexed by long roots.

O_min = G x^P (g_beta - 0) with P the stabiliser of the highest root beta,
so its B-orbits are B.X_{w beta} for w in W^P and the closure order is the
Bruhat order on W^P.  The highest root gives the smallest orbit and its
negative the dense one.

The Bruhat order on W^P is contained in the reversed root order on long
roots and agrees with it for G2, F4, B3 and C_n, but not in general: in A3,
B.E_12 is not in the closure of B.E_43 although -a3 <= a1.  ``leq`` is the
Bruhat order; ``dominance_leq`` is the root-order comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import Root, RootSystem, build_root_system, long_roots, root_leq

__all__ = [
    "MinOrbitPoset",
    "min_orbit_poset",
    "raising_parabolic_min",
    "min_orbit_weak_edges",
]


@dataclass(frozen=True)
class MinOrbitPoset:
    rs: RootSystem
    nodes: tuple[Root, ...]
    hasse_edges: tuple[tuple[Root, Root], ...]  # (smaller orbit, larger orbit)
    dims: tuple[int, ...]

    def leq(self, a: Root, b: Root) -> bool:
        """Is O_a contained in the closure of O_b?"""
        return _bruhat(self.rs.key)(a.coeffs, b.coeffs)

    def dominance_leq(self, a: Root, b: Root) -> bool:
        """b <= a in the root order."""
        return root_leq(b, a)

    @property
    def source(self) -> Root:
        return self.rs.highest_root

    @property
    def sink(self) -> Root:
        return -self.rs.highest_root

    def dim(self, rho: Root) -> int:
        return self.dims[self.nodes.index(rho)]


def min_orbit_weak_edges(rs: RootSystem) -> list[tuple[Root, Root, int]]:
    """(rho, s_i rho, i) whenever <rho, alpha_i^vee> > 0, for long rho."""
    out = []
    for rho in long_roots(rs):
        for i in range(1, rs.rank + 1):
            if rs.pairing(rho, i) > 0:
                out.append((rho, rs.reflect(rho, i), i))
    out.sort(key=lambda e: (-e[0].height, e[0].coeffs, e[2]))
    return out


class _CosetBruhat:
    """Bruhat order on W^P, P the stabiliser of the highest root.

    A Weyl group element w is stored as w(v) for a regular dominant vector v
    in root coordinates.  Each long root rho = w(beta) is attached to its
    minimal coset representative, and u <= w is decided by the lifting
    property along a left descent of w."""

    def __init__(self, rs: RootSystem):
        n = rs.rank
        self.n = n
        self.cartan = [[rs.pairing(rs.simple_root(i), j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        regular = [0] * n
        for r in rs.roots:
            if r.is_positive:
                regular = [a + b for a, b in zip(regular, r.coeffs)]
        start = (tuple(regular), rs.highest_root.coeffs)
        self.length = {start[0]: 0}
        self.rep: dict[tuple[int, ...], tuple[int, ...]] = {start[1]: start[0]}
        frontier = [start]
        while frontier:
            nxt = []
            for key, rho in frontier:
                for i in range(1, n + 1):
                    k2 = self.reflect(key, i)
                    if k2 in self.length:
                        continue
                    self.length[k2] = self.length[key] + 1
                    rho2 = self.reflect(rho, i)
                    self.rep.setdefault(rho2, k2)
                    nxt.append((k2, rho2))
            frontier = nxt
        self.memo: dict[tuple, bool] = {}

    def reflect(self, vec: tuple[int, ...], i: int) -> tuple[int, ...]:
        p = sum(vec[j] * self.cartan[j][i - 1] for j in range(self.n))
        return vec[: i - 1] + (vec[i - 1] - p,) + vec[i:]

    def _leq(self, u: tuple[int, ...], v: tuple[int, ...]) -> bool:
        key = (u, v)
        if key not in self.memo:
            lu, lv = self.length[u], self.length[v]
            if lu > lv:
                res = False
            elif lv == 0:
                res = u == v
            else:
                s = next(i for i in range(1, self.n + 1) if self.length[self.reflect(v, i)] < lv)
                su, sv = self.reflect(u, s), self.reflect(v, s)
                res = self._leq(su, sv) if self.length[su] < lu else self._leq(u, sv)
            self.memo[key] = res
        return self.memo[key]

    def __call__(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        return self._leq(self.rep[a], self.rep[b])


@lru_cache(maxsize=None)
def _bruhat(key: tuple[str, int]) -> _CosetBruhat:
    return _CosetBruhat(build_root_system(*key))


@lru_cache(maxsize=None)
def min_orbit_poset(type_label: str, rank: int) -> MinOrbitPoset:
    rs = build_root_system(type_label, rank)
    nodes = sorted(long_roots(rs), key=lambda r: (-r.height, [-c for c in r.coeffs]))
    order = _bruhat(rs.key)
    above = {
        a: [b for b in nodes if b != a and order(a.coeffs, b.coeffs)] for a in nodes
    }  # O_a lies in the closure of O_b
    hasse = []
    for a in nodes:
        for b in above[a]:
            if not any(c != b and order(c.coeffs, b.coeffs) for c in above[a]):
                hasse.append((a, b))
    # grading by distance from the highest root along weak edges
    dist = {rs.highest_root: 1}
    frontier = [rs.highest_root]
    adj: dict[Root, list[Root]] = {}
    for a, b, _ in min_orbit_weak_edges(rs):
        adj.setdefault(a, []).append(b)
    while frontier:
        nxt = []
        for a in frontier:
            for b in adj.get(a, []):
                if b not in dist:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
        frontier = nxt
    return MinOrbitPoset(rs, tuple(nodes), tuple(hasse), tuple(dist[v] for v in nodes))


def raising_parabolic_min(rho: Root) -> int:
    """Lowest i such that P_{alpha_i} raises O_rho (to O_{s_i rho})."""
    rs = build_root_system(*rho.system)
    for i in range(1, rs.rank + 1):
        if rs.pairing(rho, i) > 0:
            return i
    raise ValueError(f"{rho} is the dense orbit; no parabolic raises it")
