"""B-orbits in height-two nilpotent orbits of so_n.

Two families are covered.

BD2: square-zero elements of rank 2s (4s <= n).  The orbit is induced from
the Levi slice of elements whose upper-right 2s x 2s block h satisfies
h^T = -J h J, whose Levi Borel orbits are indexed by F_s (tau in S_2s with
J tau a fixed-point-free involution).  For n = 4s there is a second
SO_n-class, the conjugate under the reflection m = (2s, 2s+1).

BD3: the rank-two orbit O_n with z^3 = 0 and rank z^2 = 1, induced from
the k^* x SO_{n-2} slice spanned by E_{1,j} - E_{j,n}; its Levi Borel orbits
are represented by the f_i.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exmat import (
    IntMat,
    algebra_basis,
    algebra_member,
    borel_orbit_dim,
    from_sparse,
    negative_root_vector,
    nilpotency_order,
    nullspace,
    parabolic_orbit_dim,
    simple_neg_root_entry,
    sparse_rank,
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
    "OrbitIdBD2",
    "OrbitIdBD3",
    "so_weyl_tag",
    "enumerate_fpf_index",
    "deficiency",
    "enumerate_BD2",
    "representative_BD2",
    "enumerate_BD3",
    "representative_BD3",
    "f_matrix",
    "orbit_rank_BD3",
    "dim_BD",
    "weak_covers_BD",
    "sl2_triple",
    "g2_dimension",
    "nonnormal_sample_check",
    "nonnormal_polynomials",
    "nonnormal_block_matrix",
    "rule_gaps",
    "raises",
]

Perm = tuple[int, ...]


def so_weyl_tag(n: int) -> tuple[str, int]:
    if n < 4:
        raise ValueError("need n >= 4")
    return ("B", n // 2) if n % 2 else ("D", n // 2)


def _J(k: int) -> Perm:
    return tuple(range(k, 0, -1))


def _s(k: int, j: int) -> Perm:
    p = list(range(1, k + 1))
    p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


def _signed_conjugate(sigma: WeylElement, n: int, triples) -> list[tuple[int, int, int]]:
    """Entries of sigma-dot . x, sigma-dot the signed permutation matrix of
    determinant one (for odd n the middle basis vector flips when sigma is
    an odd permutation)."""
    flip = 0
    if n % 2:
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if sigma.perm[a] > sigma.perm[b]
        )
        if inv % 2:
            flip = n // 2 + 1
    out = []
    for a, b, v in triples:
        sign = (-1 if a == flip else 1) * (-1 if b == flip else 1)
        out.append((sigma(a), sigma(b), sign * v))
    return out


def _validate(x: IntMat, oid, order: int, rank: int) -> IntMat:
    if not algebra_member(x, "so"):
        raise ValueError(f"representative of {oid} is not in so_{x.n}")
    if nilpotency_order(x) != order:
        raise ValueError(f"representative of {oid} has wrong nilpotency order")
    if x.rank() != rank:
        raise ValueError(f"representative of {oid} has rank {x.rank()} != {rank}")
    return x


# -- square-zero family --------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_fpf_index(s: int) -> tuple[Perm, ...]:
    if s < 1:
        raise ValueError("s must be positive")
    k = 2 * s
    J = _J(k)
    ident = tuple(range(1, k + 1))
    out = []
    for p in permutations(ident):
        q = perm_mul(J, p)
        if perm_mul(q, q) == ident and all(q[i] != i + 1 for i in range(k)):
            out.append(p)
    return tuple(sorted(out))


def deficiency(tau: Perm) -> frozenset[int]:
    """def(tau) = {i : tau(i) + i > len(tau) + 1}."""
    f = len(tau)
    return frozenset(i for i in range(1, f + 1) if tau[i - 1] + i > f + 1)


def _tau_label(tau: Perm) -> str:
    if all(v == i for i, v in enumerate(tau, 1)):
        return "1"
    return weyl_group("A", len(tau) - 1).element(tau).label()


@dataclass(frozen=True, order=True)
class OrbitIdBD2:
    n: int
    s: int
    sigma: WeylElement
    tau: Perm
    very_even_twist: bool = False

    @property
    def label(self) -> str:
        body = f"({self.sigma.label()}, {_tau_label(self.tau)})"
        return "m" + body if self.very_even_twist else body

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        return {
            "family": "BD2",
            "n": self.n,
            "s": self.s,
            "sigma": self.sigma.label(),
            "tau": list(self.tau),
            "twist": self.very_even_twist,
        }


def _check_bd2(n: int, s: int) -> None:
    if s < 1 or 4 * s > n:
        raise ValueError(f"need 1 <= s and 4s <= n, got n={n}, s={s}")


def levi_gens_BD2(n: int, s: int) -> tuple[int, ...]:
    return set_stabilizer_gens(so_weyl_tag(n), 2 * s)


@lru_cache(maxsize=None)
def enumerate_BD2(n: int, s: int) -> tuple[OrbitIdBD2, ...]:
    _check_bd2(n, s)
    tag = so_weyl_tag(n)
    sigmas = min_coset_reps(tag, levi_gens_BD2(n, s))
    taus = enumerate_fpf_index(s)
    twists = (False, True) if n == 4 * s else (False,)
    return tuple(
        OrbitIdBD2(n, s, sg, t, tw) for tw in twists for sg in sigmas for t in taus
    )


@lru_cache(maxsize=None)
def representative_BD2(oid: OrbitIdBD2) -> IntMat:
    n, s, tau = oid.n, oid.s, oid.tau
    bad = deficiency(tau)
    block = [
        (tau[i - 1], n - 2 * s + i, -1 if i in bad else 1) for i in range(1, 2 * s + 1)
    ]
    triples = _signed_conjugate(oid.sigma, n, block)
    if oid.very_even_twist:
        m = {2 * s: 2 * s + 1, 2 * s + 1: 2 * s}
        triples = [(m.get(a, a), m.get(b, b), v) for a, b, v in triples]
    return _validate(from_sparse(n, triples), oid, 2, 2 * s)


# -- the 3-nilpotent rank-two family ---------------------------------------


def f_matrix(n: int, i: int) -> IntMat:
    r = n // 2
    if n % 2 and i == r:
        return from_sparse(n, [(1, r + 1, 1), (r + 1, n, -1)])
    if not 1 <= i <= r - 1:
        raise ValueError(f"f_{i} is not defined for n={n}")
    return from_sparse(n, [(1, i + 1, 1), (1, n - i, 1), (n - i, n, -1), (i + 1, n, -1)])


def f_indices(n: int) -> tuple[int, ...]:
    r = n // 2
    return tuple(range(1, r + (n % 2)))


@dataclass(frozen=True, order=True)
class OrbitIdBD3:
    n: int
    sigma: WeylElement
    i: int

    @property
    def label(self) -> str:
        return f"({self.sigma.label()}, f_{self.i})"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        return {"family": "BD3", "n": self.n, "sigma": self.sigma.label(), "i": self.i}


def levi_gens_BD3(n: int) -> tuple[int, ...]:
    # for n = 4 nothing stabilises {1}, so P = B
    return set_stabilizer_gens(so_weyl_tag(n), 1)


@lru_cache(maxsize=None)
def enumerate_BD3(n: int) -> tuple[OrbitIdBD3, ...]:
    tag = so_weyl_tag(n)
    sigmas = min_coset_reps(tag, levi_gens_BD3(n))
    return tuple(OrbitIdBD3(n, sg, i) for sg in sigmas for i in reversed(f_indices(n)))


def orbit_rank_BD3(oid: OrbitIdBD3) -> int:
    return 1 if oid.n % 2 and oid.i == oid.n // 2 else 2


@lru_cache(maxsize=None)
def representative_BD3(oid: OrbitIdBD3) -> IntMat:
    f = f_matrix(oid.n, oid.i)
    triples = _signed_conjugate(oid.sigma, oid.n, [(a + 1, b + 1, v) for (a, b), v in f.entries().items()])
    z = _validate(from_sparse(oid.n, triples), oid, 3, 2)
    if (z @ z).rank() != 1:
        raise ValueError(f"representative of {oid} has rank(z^2) != 1")
    return z


# -- dimensions and covers -----------------------------------------------


def _rep(oid) -> IntMat:
    return representative_BD2(oid) if isinstance(oid, OrbitIdBD2) else representative_BD3(oid)


@lru_cache(maxsize=None)
def dim_BD(oid) -> int:
    return borel_orbit_dim(_rep(oid), "so")


def raises(oid, k: int) -> bool:
    """Does the minimal parabolic P_k enlarge the orbit?  (tangent test)"""
    kind, rank = so_weyl_tag(oid.n)
    F = negative_root_vector("so", oid.n, simple_neg_root_entry(kind, rank, k))
    return parabolic_orbit_dim(_rep(oid), "so", F) > dim_BD(oid)


def _bd2_candidates(oid: OrbitIdBD2) -> list[tuple[int, OrbitIdBD2]]:
    n, s, sigma, tau = oid.n, oid.s, oid.sigma, oid.tau
    tag = so_weyl_tag(n)
    W = weyl_group(*tag)
    gens = levi_gens_BD2(n, s)
    reps = min_coset_reps(tag, gens)
    J = _J(2 * s)
    out = []
    for k in range(1, W.rank + 1):
        ks = W.gen(k) * sigma
        if ks in reps:
            if ks.length > sigma.length:
                out.append((k, OrbitIdBD2(n, s, ks, tau)))
            continue
        j = parabolic_factor(sigma, k, gens)
        if j is None or j > 2 * s - 1:
            continue
        sj = _s(2 * s, j)
        moved = perm_mul(perm_mul(perm_mul(perm_mul(sj, tau), J), sj), J)
        if moved != tau:
            out.append((k, OrbitIdBD2(n, s, sigma, moved)))
    return out


def _swap_last(n: int, k: int) -> int:
    r = n // 2
    return {r - 1: r, r: r - 1}.get(k, k)


def _bd3_candidates(oid: OrbitIdBD3) -> list[tuple[int, OrbitIdBD3, str]]:
    n, sigma, i = oid.n, oid.sigma, oid.i
    tag = so_weyl_tag(n)
    W = weyl_group(*tag)
    gens = levi_gens_BD3(n)
    reps = min_coset_reps(tag, gens)
    out = []
    for k in range(1, W.rank + 1):
        ks = W.gen(k) * sigma
        if ks in reps:
            if ks.length > sigma.length:
                out.append((k, OrbitIdBD3(n, ks, i), "U"))
            continue
        if i > 1 and raises(oid, k):
            kind = "N" if orbit_rank_BD3(oid) == 1 else "U"
            out.append((k, OrbitIdBD3(n, sigma, i - 1), kind))
    return out


def weak_covers_BD(oid, validate: bool = True) -> list[tuple[int, object, str]]:
    """Raisings (k, target, type) of a BD2 or BD3 orbit by minimal parabolics.

    sigma-moves come from the coset representatives; moves inside the Levi
    slice from the slice's weak order.  Every cover is checked against the
    orbit-dimension oracle.
    """
    if isinstance(oid, OrbitIdBD2):
        if oid.very_even_twist:
            base = OrbitIdBD2(oid.n, oid.s, oid.sigma, oid.tau, False)
            cands = [
                (_swap_last(oid.n, k), OrbitIdBD2(t.n, t.s, t.sigma, t.tau, True), "U")
                for k, t, _ in weak_covers_BD(base, validate=False)
            ]
        else:
            cands = [
                (k, t, "U")
                for k, t in _bd2_candidates(oid)
                if dim_BD(t) == dim_BD(oid) + 1
            ]
    elif isinstance(oid, OrbitIdBD3):
        cands = _bd3_candidates(oid)
    else:
        raise TypeError(f"not an orthogonal orbit id: {oid!r}")
    if validate:
        d = dim_BD(oid)
        for k, t, _ in cands:
            if dim_BD(t) != d + 1:
                raise AssertionError(f"cover {oid} -> {t} via P{k}: dims {d} -> {dim_BD(t)}")
            if not raises(oid, k):
                raise AssertionError(f"P{k} does not raise {oid}")
    return cands


def rule_gaps(oid) -> list[int]:
    """Parabolics that enlarge the orbit but produce no cover: a diagnostic
    that should always come back empty."""
    covered = {k for k, _, _ in weak_covers_BD(oid, validate=False)}
    W = weyl_group(*so_weyl_tag(oid.n))
    return [k for k in range(1, W.rank + 1) if k not in covered and raises(oid, k)]


# -- sl2-triple and the non-normal example --------------------------------


def sl2_triple(n: int) -> tuple[IntMat, IntMat, IntMat]:
    x = from_sparse(n, [(1, 2, 1), (1, n - 1, 1), (2, n, -1), (n - 1, n, -1)])
    y = from_sparse(n, [(2, 1, 1), (n - 1, 1, 1), (n, 2, -1), (n, n - 1, -1)])
    h = from_sparse(n, [(1, 1, 2), (n, n, -2)])
    return x, y, h


def g2_dimension(n: int) -> int:
    """dim so_n(2): the nullity of ad_h - 2 on so_n."""
    _, _, h = sl2_triple(n)
    hd = h.entries()
    images = []
    for z in algebra_basis("so", n):
        img: dict[tuple[int, int], int] = {}
        for (a, b), v in z.items():
            c = hd.get((a, a), 0) - hd.get((b, b), 0) - 2
            if c:
                img[(a, b)] = img.get((a, b), 0) + c * v
        images.append(img)
    return len(images) - sparse_rank(images)


def _nonnormal_C(X1, X2, X3):
    return [[X1, X2, 0], [X3, 0, -X2], [0, -X3, -X1]]


def _mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def nonnormal_polynomials(C, y) -> tuple[Fraction, Fraction]:
    X1, X2, X3 = C[0][0], C[0][1], C[1][0]
    Y1, Y2, Y3 = y
    return X1 * X1 + 2 * X2 * X3, X1 * Y2 - X2 * Y3 - X3 * Y1


def nonnormal_block_matrix(C, y) -> list[list[Fraction]]:
    """The 5 x 5 matrix with rows (0, -y^T J_3, 0), (0, C, y), (0, 0, 0)."""
    yJ = [y[2], y[1], y[0]]
    z = [[Fraction(0)] * 5 for _ in range(5)]
    for j in range(3):
        z[0][1 + j] = -yJ[j]
        z[1 + j][4] = y[j]
        for k in range(3):
            z[1 + j][1 + k] = C[j][k]
    return z


def nonnormal_sample_check(samples: int = 100, seed: int = 0) -> dict:
    """Sample points of Z = {(C, y) : C in N(so_3), C^2 y = 0} exactly and
    evaluate the two defining polynomials on them.

    Nilpotent C are parametrised by X1 = 2ast, X2 = as^2, X3 = -2at^2, and
    y is drawn from the kernel of C^2.
    """
    rng = random.Random(seed)

    def q() -> Fraction:
        while True:
            v = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            if v:
                return v

    passed = failed = 0
    bad = []
    for _ in range(samples):
        a, s, t = q(), q(), q()
        C = _nonnormal_C(2 * a * s * t, a * s * s, -2 * a * t * t)
        C2 = _mul(C, C)
        ker = nullspace(C2)
        coeffs = [q() for _ in ker]
        y = [sum(c * v[k] for c, v in zip(coeffs, ker)) for k in range(3)]
        ok = all(v == 0 for row in _mul(C2, [[c] for c in y]) for v in row)
        z = nonnormal_block_matrix(C, y)
        ok = ok and all(
            z[i][j] == -z[4 - j][4 - i] for i in range(5) for j in range(5)
        )  # so_5 for the antidiagonal form
        z3 = _mul(_mul(z, z), z)
        ok = ok and all(v == 0 for row in z3 for v in row)
        p1, p2 = nonnormal_polynomials(C, y)
        if ok and p1 == 0 and p2 == 0:
            passed += 1
        else:
            failed += 1
            bad.append((C, y))
    return {"samples": samples, "passed": passed, "failed": failed, "bad": bad[:3]}
