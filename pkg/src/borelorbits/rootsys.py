"""Root systems of simple Lie algebras as coefficient vectors over simple roots.

Numbering follows Bourbaki except for F4, where alpha_1 and alpha_2 are the
short simple roots (so the highest root reads (2432)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Root",
    "RootSystem",
    "build_root_system",
    "long_roots",
    "root_leq",
    "inner_product",
    "parse_root",
    "parse_type",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}


@dataclass(frozen=True, order=True)
class Root:
    """A root written as integer coefficients over the simple roots."""

    coeffs: tuple[int, ...]
    system: tuple[str, int] = field(compare=False)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs), self.system)

    def __add__(self, other: Root) -> Root:
        _same_system(self, other)
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.system)

    def __sub__(self, other: Root) -> Root:
        return self + (-other)

    def __str__(self) -> str:
        body = "".join(str(abs(c)) for c in self.coeffs)
        return f"({body})" if self.is_positive else f"-({body})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _same_system(a: Root, b: Root) -> None:
    if a.system != b.system:
        raise ValueError(f"roots from different systems: {a.system} vs {b.system}")


def _cartan(kind: str, n: int) -> list[list[int]]:
    """A[i][j] = <alpha_i^vee, alpha_j>."""
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if kind in "ABCD":
        for i in range(1, n):
            link(i, i + 1)
        if kind == "B":
            link(n - 1, n, -1, -2)
        elif kind == "C":
            link(n - 1, n, -2, -1)
        elif kind == "D":
            A[n - 2][n - 1] = A[n - 1][n - 2] = 0
            link(n - 2, n)
    elif kind == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif kind == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif kind == "G":
        link(1, 2, -3, -1)
    return A


def _half_lengths(kind: str, n: int) -> list[Fraction]:
    """(alpha_i, alpha_i) / 2 with long roots normalised to squared length 2."""
    one, half = Fraction(1), Fraction(1, 2)
    if kind == "B":
        return [one] * (n - 1) + [half]
    if kind == "C":
        return [half] * (n - 1) + [one]
    if kind == "F":
        return [half, half, one, one]
    if kind == "G":
        return [Fraction(1, 3), one]
    return [one] * n


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    simple_root_lengths: tuple[str, ...]
    _half: tuple[Fraction, ...] = field(repr=False)

    @property
    def key(self) -> tuple[str, int]:
        return (self.type_label, self.rank)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def simple_root(self, i: int) -> Root:
        return Root(tuple(int(j == i - 1) for j in range(self.rank)), self.key)

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(-r for r in reversed(self.positive_roots)) + self.positive_roots

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def root(self, coeffs) -> Root:
        r = Root(tuple(coeffs), self.key)
        if r not in self._root_set:
            raise ValueError(f"{r} is not a root of {self.name}")
        return r

    @property
    def _root_set(self) -> frozenset[Root]:
        return _root_set(self)

    def pairing(self, rho: Root, i: int) -> int:
        """<rho, alpha_i^vee>."""
        return sum(c * a for c, a in zip(rho.coeffs, self.cartan[i - 1]))

    def reflect(self, rho: Root, i: int) -> Root:
        k = self.pairing(rho, i)
        coeffs = list(rho.coeffs)
        coeffs[i - 1] -= k
        return Root(tuple(coeffs), self.key)

    def norm2(self, rho: Root) -> Fraction:
        return inner_product(self, rho, rho)


@lru_cache(maxsize=None)
def _root_set(rs: RootSystem) -> frozenset[Root]:
    return frozenset(rs.roots)


def parse_type(label: str) -> tuple[str, int]:
    """'G2' -> ('G', 2)."""
    label = label.strip()
    kind, digits = label[:1].upper(), label[1:]
    if not digits.isdigit():
        raise ValueError(f"bad type label {label!r}")
    return kind, int(digits)


def _check_type(kind: str, n: int) -> None:
    ok = kind in _MIN_RANK and n >= _MIN_RANK[kind]
    if kind == "E":
        ok = n in (6, 7, 8)
    elif kind in "FG":
        ok = n == _MIN_RANK[kind]
    if not ok:
        raise ValueError(f"no simple root system of type {kind}{n}")


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    kind = type_label.upper()
    _check_type(kind, rank)
    A = _cartan(kind, rank)
    key = (kind, rank)
    simples = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    found = set(simples)
    frontier = list(simples)
    cap = 2 * 30 * rank  # generous bound on root height
    while frontier:
        nxt = []
        for coeffs in frontier:
            for i in range(rank):
                k = sum(c * a for c, a in zip(coeffs, A[i]))
                if k == 0:
                    continue
                new = list(coeffs)
                new[i] -= k
                new = tuple(new)
                if abs(sum(new)) > cap:
                    raise RuntimeError("root generation ran away")
                if new not in found:
                    found.add(new)
                    nxt.append(new)
        frontier = nxt
    positive = sorted(
        (Root(c, key) for c in found if sum(c) > 0),
        key=lambda r: (r.height, r.coeffs),
    )
    half = _half_lengths(kind, rank)
    marks = tuple("long" if h == 1 else "short" for h in half)
    return RootSystem(
        kind, rank, tuple(map(tuple, A)), tuple(positive), marks, tuple(half)
    )


def inner_product(rs: RootSystem, rho: Root, rho2: Root) -> Fraction:
    """Symmetrised Cartan form, long roots of squared length 2."""
    _same_system(rho, rho2)
    if rho.system != rs.key:
        raise ValueError(f"root {rho} is not in {rs.name}")
    total = Fraction(0)
    for i, a in enumerate(rho.coeffs):
        if not a:
            continue
        row = rs.cartan[i]
        d = rs._half[i]
        for j, b in enumerate(rho2.coeffs):
            if b:
                total += a * b * d * row[j]
    return total


def long_roots(rs: RootSystem) -> list[Root]:
    roots = rs.roots
    norms = [inner_product(rs, r, r) for r in roots]
    top = max(norms)
    return [r for r, q in zip(roots, norms) if q == top]


def root_leq(rho: Root, rho2: Root) -> bool:
    """rho <= rho2 iff rho2 - rho is a nonnegative combination of simple roots."""
    _same_system(rho, rho2)
    return all(b >= a for a, b in zip(rho.coeffs, rho2.coeffs))


def parse_root(text: str, rs: RootSystem) -> Root:
    """'(2234321)' or '-(0011)' -> Root; also accepts '2,2,3'-style lists."""
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:].strip()
    s = s.strip("()[] ")
    if "," in s:
        coeffs = [int(t) for t in s.split(",")]
    else:
        coeffs = [int(ch) for ch in s]
    return rs.root(sign * c for c in coeffs)
