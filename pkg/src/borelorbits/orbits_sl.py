"""B-orbits in the rank-r nilpotent orbit of square-zero matrices in sl_n.

The orbit O_r of x_r = sum_j E_{j, n-r+j} decomposes into B-orbits
B.sigma w.x_r with sigma a minimal representative modulo the stabiliser of
the flag V_r c V_{n-r} and w in the copy of S_r acting on the first block.
Two group elements give the same orbit iff they agree modulo W(C_r), the
Weyl group of the centraliser-like block group C_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exmat import IntMat, borel_orbit_dim, from_sparse, rank_matrix, RankMatrix
from .weyl import (
    WeylElement,
    bruhat_leq,
    min_coset_reps,
    stabilizer_subgroup_A,
    weyl_group,
)

__all__ = [
    "OrbitIdA",
    "base_point",
    "enumerate_A",
    "representative_A",
    "dim_A",
    "closure_leq_A",
    "link_pattern_A",
    "weak_covers_A",
    "orbit_key_A",
]


@dataclass(frozen=True, order=True)
class OrbitIdA:
    n: int
    r: int
    sigma: WeylElement
    w: WeylElement

    @property
    def label(self) -> str:
        return f"({self.sigma.label()}, {self.w.label()})"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        return {
            "family": "A",
            "n": self.n,
            "r": self.r,
            "sigma": self.sigma.label(),
            "w": self.w.label(),
        }


def _check(n: int, r: int) -> None:
    if n < 1 or r < 0 or 2 * r > n:
        raise ValueError(f"need 0 <= 2r <= n, got n={n}, r={r}")


def base_point(n: int, r: int) -> IntMat:
    _check(n, r)
    return from_sparse(n, [(j, n - r + j, 1) for j in range(1, r + 1)])


def _parabolic_gens(n: int, r: int) -> tuple[int, ...]:
    return tuple(j for j in range(1, n) if j not in (r, n - r))


@lru_cache(maxsize=None)
def enumerate_A(n: int, r: int) -> tuple[OrbitIdA, ...]:
    _check(n, r)
    if n == 1:
        raise ValueError("sl_1 has no nonzero nilpotents; take n >= 2")
    tag = ("A", n - 1)
    W = weyl_group(*tag)
    sigmas = min_coset_reps(tag, _parabolic_gens(n, r))
    ws = [W.element(p + tuple(range(r + 1, n + 1))) for p in _block_perms(r)]
    ws.sort(key=lambda e: (e.length, e.perm))
    return tuple(OrbitIdA(n, r, s, w) for s in sigmas for w in ws)


def _block_perms(r: int):
    from itertools import permutations

    return list(permutations(range(1, r + 1)))


def representative_A(oid: OrbitIdA) -> IntMat:
    n, r = oid.n, oid.r
    sw = oid.sigma * oid.w
    return from_sparse(n, [(sw(j), oid.sigma(n - r + j), 1) for j in range(1, r + 1)])


def dim_A(oid: OrbitIdA) -> int:
    return oid.sigma.length + oid.w.length + comb(oid.r + 1, 2)


@lru_cache(maxsize=None)
def _wcr(n: int, r: int) -> tuple[WeylElement, ...]:
    return tuple(sorted(stabilizer_subgroup_A(n, r)))


def orbit_key_A(n: int, r: int, u: WeylElement) -> WeylElement:
    """Canonical (shortest, then lex) element of the coset u W(C_r)."""
    return min((u * h for h in _wcr(n, r)), key=lambda e: (e.length, e.perm))


@lru_cache(maxsize=None)
def _key_index(n: int, r: int) -> dict[WeylElement, OrbitIdA]:
    out = {}
    for oid in enumerate_A(n, r):
        key = orbit_key_A(n, r, oid.sigma * oid.w)
        if key in out:
            raise AssertionError(f"orbits {out[key]} and {oid} share a coset")
        out[key] = oid
    return out


def orbit_of_A(n: int, r: int, u: WeylElement) -> OrbitIdA:
    """The orbit through u.x_r."""
    return _key_index(n, r)[orbit_key_A(n, r, u)]


@lru_cache(maxsize=None)
def _rank_matrix(oid: OrbitIdA) -> RankMatrix:
    return rank_matrix(representative_A(oid))


def closure_leq_A(a: OrbitIdA, b: OrbitIdA, criterion: str = "bruhat") -> bool:
    """Is the orbit a contained in the closure of the orbit b?"""
    if criterion == "rank":
        if a.n != b.n:
            raise ValueError("orbits in different sl_n")
        return _rank_matrix(a).leq(_rank_matrix(b))
    if criterion != "bruhat":
        raise ValueError(f"unknown criterion {criterion!r}")
    if (a.n, a.r) != (b.n, b.r):
        raise ValueError("the Bruhat criterion compares orbits inside one O_r")
    top = b.sigma * b.w
    ua = a.sigma * a.w
    return any(bruhat_leq(ua * h, top) for h in _wcr(a.n, a.r))


def link_pattern_A(oid: OrbitIdA) -> list[tuple[int, int]]:
    n, r = oid.n, oid.r
    sw = oid.sigma * oid.w
    return [(oid.sigma(n - r + j), sw(j)) for j in range(1, r + 1)]


def weak_covers_A(oid: OrbitIdA, validate: bool = True) -> list[tuple[int, OrbitIdA, str]]:
    """Minimal parabolics raising the orbit, as (i, target, "U")."""
    n, r = oid.n, oid.r
    W = weyl_group("A", n - 1)
    u = oid.sigma * oid.w
    d = dim_A(oid)
    out = []
    for i in range(1, n):
        tgt = orbit_of_A(n, r, W.gen(i) * u)
        if dim_A(tgt) != d + 1:
            continue
        if validate:
            d0 = borel_orbit_dim(representative_A(oid), "sl")
            d1 = borel_orbit_dim(representative_A(tgt), "sl")
            if (d0, d1) != (d, d + 1):
                raise AssertionError(
                    f"cover {oid} -> {tgt} via s{i}: oracle dims {d0}, {d1}"
                )
        out.append((i, tgt, "U"))
    return out
