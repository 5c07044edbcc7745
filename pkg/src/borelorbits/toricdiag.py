"""Toric diagnostics for the three-dimensional orbit closure

    Z = {(A, v) in M_2 x k^2 : A^2 = 0, A v = 0}

which is an affine toric variety.  Its torus is parametrised by
(t1, t2, t3) -> (A, v) with A = [[t1, -t2], [t1^2/t2, -t1]] and
v = (t3, t1 t3 / t2).  The cone of Z has rays (0,0,1), (1,0,0), (1,1,0),
(1,2,1), and these do not lie on an affine hyperplane, so Z is not
Gorenstein.

The Gorenstein test here only looks at ray generators: it asks for a linear
functional equal to 1 on every primitive ray generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .exmat import bareiss_rank, nullspace

__all__ = [
    "RatCone",
    "GorensteinResult",
    "EXAMPLE_RAYS",
    "EXAMPLE_CHARACTERS",
    "gorenstein_check",
    "torus_point",
    "z_variety_check",
    "dual_cone_rays",
]

EXAMPLE_RAYS = ((0, 0, 1), (1, 0, 0), (1, 1, 0), (1, 2, 1))

# exponents of t1, t2, t3 in the coordinates A11, A12, A21, v1, v2 of a torus point
EXAMPLE_CHARACTERS = ((1, 0, 0), (0, 1, 0), (2, -1, 0), (0, 0, 1), (1, -1, 1))


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, (abs(int(x)) for x in v), 0)
    if g == 0:
        raise ValueError("zero vector is not a ray generator")
    return tuple(int(x) // g for x in v)


@dataclass(frozen=True)
class RatCone:
    rays: tuple[tuple[int, ...], ...]

    def __init__(self, rays):
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            raise ValueError("a cone needs at least one ray generator")
        if len({len(r) for r in rays}) != 1:
            raise ValueError("ray generators of different lengths")
        object.__setattr__(self, "rays", tuple(_primitive(r) for r in rays))

    @property
    def ambient_dim(self) -> int:
        return len(self.rays[0])

    @property
    def dim(self) -> int:
        return bareiss_rank(self.rays)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rays]


@dataclass(frozen=True)
class GorensteinResult:
    gorenstein: bool
    functional: tuple[Fraction, ...] | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.gorenstein

    def to_json(self) -> dict:
        out: dict = {"gorenstein": self.gorenstein}
        if self.functional is not None:
            out["functional"] = [str(x) for x in self.functional]
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _integral(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0) or 1
    return tuple(x // g for x in ints)


def gorenstein_check(c: RatCone) -> GorensteinResult:
    """Is there a rational functional lam with lam(u) = 1 for every primitive
    ray generator u?  If not, the witness is an integer vector y with
    sum_i y_i u_i = 0 but sum_i y_i != 0."""
    V = [list(r) for r in c.rays]
    aug = [row + [1] for row in V]
    if bareiss_rank(aug) == bareiss_rank(V):
        # lam is a solution of V lam = 1: take the last coordinate of a kernel
        # vector of [V | -1] equal to one
        for v in nullspace([row + [-1] for row in V]):
            if v[-1] != 0:
                lam = tuple(x / v[-1] for x in v[:-1])
                return GorensteinResult(True, functional=lam)
        raise AssertionError("consistent system without a solution")
    transposed = [[V[i][j] for i in range(len(V))] for j in range(c.ambient_dim)]
    for y in nullspace(transposed):
        if sum(y) != 0:
            w = _integral(y)
            if sum(w) < 0:
                w = tuple(-x for x in w)
            return GorensteinResult(False, witness=w)
    raise AssertionError("inconsistent system without a witness")


def torus_point(t1: Fraction, t2: Fraction, t3: Fraction):
    """(A, v) for the torus coordinates (t1, t2, t3), all nonzero."""
    t1, t2, t3 = Fraction(t1), Fraction(t2), Fraction(t3)
    if 0 in (t1, t2, t3):
        raise ValueError("torus coordinates must be nonzero")
    A = [[t1, -t2], [t1 * t1 / t2, -t1]]
    v = [t3, t1 * t3 / t2]
    return A, v


def z_variety_check(samples: int = 100, seed: int = 0) -> dict:
    """Check A^2 = 0 and A v = 0 on random torus points, exactly."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)

    def q() -> Fraction:
        while True:
            x = Fraction(rng.randint(-99, 99), rng.randint(1, 30))
            if x:
                return x

    passed = 0
    for _ in range(samples):
        A, v = torus_point(q(), q(), q())
        A2 = [[sum(A[i][k] * A[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        Av = [sum(A[i][k] * v[k] for k in range(2)) for i in range(2)]
        if all(x == 0 for row in A2 for x in row) and all(x == 0 for x in Av):
            passed += 1
    return {"samples": samples, "passed": passed, "failed": samples - passed}


def dual_cone_rays(characters: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Primitive extremal rays of {u : <u, m> >= 0 for all m}, assuming the
    characters span the space (so the dual cone is pointed)."""
    d = len(characters[0])
    out = set()
    for subset in combinations(characters, d - 1):
        ker = nullspace([list(m) for m in subset])
        if len(ker) != 1:
            continue
        for sign in (1, -1):
            u = [sign * x for x in ker[0]]
            if all(sum(a * b for a, b in zip(u, m)) >= 0 for m in characters):
                out.add(_integral(u))
    return sorted(out)
