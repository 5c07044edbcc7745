"""B-orbits in the rank-r square-zero nilpotent orbit C_r of sp_2n.

C_r is induced from the Levi slice of matrices whose only nonzero block is
the upper-right r x r block h with h^T = J_r h J_r.  Orbits of the Levi Borel
on that slice are indexed by R_r, the permutations tau of [r] with J_r tau
an involution, so B-orbits in C_r are indexed by W^r x R_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .exmat import (
    IntMat,
    RankMatrix,
    algebra_member,
    borel_orbit_dim,
    from_sparse,
    nilpotency_order,
    rank_matrix,
)
from .weyl import (
    WeylElement,
    min_coset_reps,
    parabolic_factor,
    perm_mul,
    set_stabilizer_gens,
    weyl_group,
)

__all__ = [
    "OrbitIdC",
    "enumerate_involution_index",
    "enumerate_C",
    "representative_C",
    "dim_C",
    "weak_covers_C",
    "closure_leq_C",
    "tau_label",
]

Perm = tuple[int, ...]


def tau_label(tau: Perm) -> str:
    if all(v == i for i, v in enumerate(tau, 1)):
        return "1"
    return weyl_group("A", len(tau) - 1).element(tau).label()


@dataclass(frozen=True, order=True)
class OrbitIdC:
    n: int
    r: int
    sigma: WeylElement
    tau: Perm

    @property
    def label(self) -> str:
        return f"({self.sigma.label()}, {tau_label(self.tau)})"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        return {
            "family": "C",
            "n": self.n,
            "r": self.r,
            "sigma": self.sigma.label(),
            "tau": list(self.tau),
        }


def _J(r: int) -> Perm:
    return tuple(range(r, 0, -1))


def _s(r: int, j: int) -> Perm:
    p = list(range(1, r + 1))
    p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def enumerate_involution_index(r: int) -> tuple[Perm, ...]:
    if r < 1:
        raise ValueError("r must be positive")
    J = _J(r)
    out = []
    for p in permutations(range(1, r + 1)):
        q = perm_mul(J, p)
        if perm_mul(q, q) == tuple(range(1, r + 1)):
            out.append(p)
    inv = lambda p: sum(1 for a in range(r) for b in range(a + 1, r) if p[a] > p[b])
    return tuple(sorted(out, key=lambda p: (inv(p), p)))


def _check(n: int, r: int) -> None:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")


def levi_gens(n: int, r: int) -> tuple[int, ...]:
    return set_stabilizer_gens(("C", n), r)


@lru_cache(maxsize=None)
def enumerate_C(n: int, r: int) -> tuple[OrbitIdC, ...]:
    _check(n, r)
    sigmas = min_coset_reps(("C", n), levi_gens(n, r))
    taus = enumerate_involution_index(r)
    return tuple(OrbitIdC(n, r, s, t) for s in sigmas for t in taus)


def pos(sigma: WeylElement, n: int) -> frozenset[int]:
    return frozenset(i for i in range(1, n + 1) if sigma(i) <= n)


@lru_cache(maxsize=None)
def representative_C(oid: OrbitIdC) -> IntMat:
    n, r, s, t = oid.n, oid.r, oid.sigma, oid.tau
    p = pos(s, n)
    triples = [
        (s(t[i - 1]), s(2 * n - r + i), 1 if t[i - 1] in p else -1)
        for i in range(1, r + 1)
    ]
    x = from_sparse(2 * n, triples)
    if not algebra_member(x, "sp"):
        raise ValueError(f"representative of {oid} is not in sp_{2 * n}")
    if nilpotency_order(x) != 2:
        raise ValueError(f"representative of {oid} does not square to zero")
    if x.rank() != r:
        raise ValueError(f"representative of {oid} has rank {x.rank()} != {r}")
    return x


@lru_cache(maxsize=None)
def dim_C(oid: OrbitIdC) -> int:
    return borel_orbit_dim(representative_C(oid), "sp")


@lru_cache(maxsize=None)
def _rank_matrix(oid: OrbitIdC) -> RankMatrix:
    return rank_matrix(representative_C(oid))


def closure_leq_C(a: OrbitIdC, b: OrbitIdC) -> bool:
    if a.n != b.n:
        raise ValueError("orbits in different sp_2n")
    return _rank_matrix(a).leq(_rank_matrix(b))


def _candidates(oid: OrbitIdC) -> list[tuple[int, OrbitIdC, str]]:
    n, r, sigma, tau = oid.n, oid.r, oid.sigma, oid.tau
    W = weyl_group("C", n)
    gens = levi_gens(n, r)
    reps = min_coset_reps(("C", n), gens)
    J = _J(r)
    out = []
    for i in range(1, n + 1):
        cs = W.gen(i) * sigma
        if cs in reps:
            if cs.length > sigma.length:
                out.append((i, OrbitIdC(n, r, cs, tau), "U"))
            continue
        j = parabolic_factor(sigma, i, gens)
        if j is None or j > r - 1:
            continue
        sj = _s(r, j)
        moved = perm_mul(perm_mul(perm_mul(perm_mul(sj, tau), J), sj), J)
        if moved != tau:
            out.append((i, OrbitIdC(n, r, sigma, moved), "U"))
        else:
            out.append((i, OrbitIdC(n, r, sigma, perm_mul(sj, tau)), "N"))
    return out


def weak_covers_C(oid: OrbitIdC, validate: bool = True) -> list[tuple[int, OrbitIdC, str]]:
    """Raisings of the orbit by minimal parabolics P_i, as (i, target, type).

    Candidates come from the three cases of the weak order on the Levi
    slice; a candidate is kept when its rank matrix strictly dominates.
    """
    src = _rank_matrix(oid)
    out = []
    for i, tgt, kind in _candidates(oid):
        rm = _rank_matrix(tgt)
        if rm == src or not src.leq(rm):
            continue
        if validate and dim_C(tgt) != dim_C(oid) + 1:
            raise AssertionError(
                f"cover {oid} -> {tgt} via c{i}: dims {dim_C(oid)} -> {dim_C(tgt)}"
            )
        out.append((i, tgt, kind))
    return out
