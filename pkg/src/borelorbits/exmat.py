"""Exact integer matrices for classical Lie algebras.

Indices in the public constructors are 1-based, as in the usual
``E_{i,j}`` notation; storage is a tuple of row tuples.  Nothing in here
touches floating point.  Ranks are computed by fraction-free elimination,
either dense (Bareiss) or on sparse integer rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "ALGEBRAS",
    "IntMat",
    "RankMatrix",
    "Echelon",
    "elementary",
    "antidiag_J",
    "symplectic_K",
    "identity",
    "zeros",
    "from_sparse",
    "from_json",
    "bareiss_rank",
    "sparse_rank",
    "algebra_member",
    "bracket",
    "nilpotency_order",
    "rank_matrix",
    "algebra_basis",
    "borel_basis",
    "borel_orbit_dim",
    "parabolic_orbit_dim",
    "negative_root_vector",
    "unipotent",
    "nullspace",
    "simple_neg_root_entry",
]

ALGEBRAS = ("gl", "sl", "sp", "so")

Sparse = Mapping[tuple[int, int], int]


class IntMat:
    """Square integer matrix with value semantics."""

    __slots__ = ("rows", "_nz", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("IntMat must be square")
        self.rows = rows
        self._nz = None
        self._hash = None

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def entries(self) -> dict[tuple[int, int], int]:
        """Nonzero entries keyed by 0-based (row, col)."""
        if self._nz is None:
            self._nz = {
                (i, j): v
                for i, row in enumerate(self.rows)
                for j, v in enumerate(row)
                if v
            }
        return self._nz

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMat) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        terms = []
        for (i, j), v in sorted(self.entries().items()):
            coeff = "" if v == 1 else "-" if v == -1 else f"{v}*"
            terms.append(f"{coeff}E{i + 1},{j + 1}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"IntMat<{self.n}>({body})"

    def __add__(self, other: IntMat) -> IntMat:
        _same_size(self, other)
        return IntMat(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: IntMat) -> IntMat:
        _same_size(self, other)
        return IntMat(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> IntMat:
        return IntMat([-a for a in row] for row in self.rows)

    def __mul__(self, k: int) -> IntMat:
        return IntMat([k * a for a in row] for row in self.rows)

    __rmul__ = __mul__

    def __matmul__(self, other: IntMat) -> IntMat:
        _same_size(self, other)
        n = self.n
        out = [[0] * n for _ in range(n)]
        right = other.entries()
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in right.items():
            by_row.setdefault(k, []).append((j, v))
        for (i, k), a in self.entries().items():
            for j, b in by_row.get(k, ()):
                out[i][j] += a * b
        return IntMat(out)

    def __pow__(self, k: int) -> IntMat:
        result = identity(self.n)
        for _ in range(k):
            result = result @ self
        return result

    @property
    def T(self) -> IntMat:
        return IntMat(zip(*self.rows))

    def is_zero(self) -> bool:
        return not self.entries()

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def rank(self) -> int:
        return bareiss_rank(self.rows)

    def is_monomial(self) -> bool:
        """At most one nonzero entry in every row and every column."""
        nz = self.entries()
        return len({i for i, _ in nz}) == len(nz) == len({j for _, j in nz})

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _same_size(a: IntMat, b: IntMat) -> None:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")


def zeros(n: int) -> IntMat:
    return IntMat([0] * n for _ in range(n))


def identity(n: int) -> IntMat:
    return IntMat([int(i == j) for j in range(n)] for i in range(n))


def from_sparse(n: int, triples: Iterable[tuple[int, int, int]]) -> IntMat:
    """Build from 1-based ``(i, j, value)`` triples; repeated positions add up."""
    rows = [[0] * n for _ in range(n)]
    for i, j, v in triples:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"index ({i},{j}) out of range for size {n}")
        rows[i - 1][j - 1] += v
    return IntMat(rows)


def from_json(data, n: int | None = None) -> IntMat:
    """Accept a dense row-major array or a list of ``{i, j, val}`` objects."""
    if data and isinstance(data[0], Mapping):
        if n is None:
            n = max(max(int(t["i"]), int(t["j"])) for t in data)
        return from_sparse(n, ((int(t["i"]), int(t["j"]), int(t["val"])) for t in data))
    if not data:
        return zeros(n or 0)
    return IntMat(data)


def elementary(i: int, j: int, n: int) -> IntMat:
    return from_sparse(n, [(i, j, 1)])


def antidiag_J(n: int) -> IntMat:
    return IntMat([int(i + j == n - 1) for j in range(n)] for i in range(n))


def symplectic_K(n: int) -> IntMat:
    """The 2n x 2n matrix [[0, J_n], [-J_n, 0]]."""
    m = 2 * n
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][m - 1 - i] = 1 if i < n else -1
    return IntMat(rows)


# -- ranks ---------------------------------------------------------------


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, n_cols):
                num = p * row_r[c] - f * row_p[c]
                # exact division is the Bareiss invariant
                row_r[c] = num // prev if type(num) is int and type(prev) is int else num / prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


class Echelon:
    """Incremental row echelon form over sparse integer vectors."""

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[object, dict] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def add(self, vec: Mapping) -> bool:
        """Insert a vector; return True iff it was independent of the rest."""
        v = {k: c for k, c in vec.items() if c}
        while v:
            col = min(v)
            p = self.pivots.get(col)
            if p is None:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                if g > 1:
                    v = {k: c // g for k, c in v.items()}
                self.pivots[col] = v
                return True
            a, b = v[col], p[col]
            new = {k: b * c for k, c in v.items()}
            for k, c in p.items():
                new[k] = new.get(k, 0) - a * c
            g = 0
            for c in new.values():
                g = gcd(g, c)
            v = {k: c // g for k, c in new.items() if c} if g else {}
        return False


def sparse_rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


# -- Lie algebra membership ----------------------------------------------


def nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of {v : rows . v = 0} over the rationals (reduced row echelon)."""
    if not rows:
        return []
    m = [[Fraction(v) for v in row] for row in rows]
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def algebra_member(x: IntMat, algebra: str) -> bool:
    """Exact membership test in gl, sl, sp (form K_n) or so (form J_n)."""
    n = x.n
    if algebra == "gl":
        return True
    if algebra == "sl":
        return x.trace() == 0
    if algebra == "sp":
        if n % 2:
            raise ValueError("sp needs even size")
        K = symplectic_K(n // 2)
        return x.T == K @ x @ K
    if algebra == "so":
        J = antidiag_J(n)
        return x.T == -(J @ x @ J)
    raise ValueError(f"unknown algebra {algebra!r}")


def bracket(x: IntMat, y: IntMat) -> IntMat:
    return x @ y - y @ x


def nilpotency_order(x: IntMat) -> int:
    """Least k >= 1 with x^k = 0; the zero matrix has order 1."""
    power = x
    for k in range(1, x.n + 1):
        if power.is_zero():
            return k
        power = power @ x
    raise ValueError("matrix is not nilpotent")


# -- rank matrices ------------------------------------------------------


@dataclass(frozen=True)
class RankMatrix:
    """Table of r(i, j) = dim(x(V_i) + V_j) for 0 <= i, j <= n."""

    n: int
    table: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        return self.table[i][j]

    def leq(self, other: RankMatrix) -> bool:
        if self.n != other.n:
            raise ValueError("rank matrices of different sizes")
        return all(
            a <= b for ra, rb in zip(self.table, other.table) for a, b in zip(ra, rb)
        )


def rank_matrix(x: IntMat, *, generic: bool = False) -> RankMatrix:
    n = x.n
    if not generic and x.is_monomial():
        # columns carry distinct unit-like vectors, so ranks are counts
        col_row = {j: i for (i, j) in x.entries()}
        table = tuple(
            tuple(
                j + sum(1 for c in range(i) if c in col_row and col_row[c] >= j)
                for j in range(n + 1)
            )
            for i in range(n + 1)
        )
        return RankMatrix(n, table)
    cols = [
        {r: v for (r, c), v in x.entries().items() if c == col} for col in range(n)
    ]
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        ech = Echelon()
        table[0][j] = j
        for i in range(1, n + 1):
            ech.add({r: v for r, v in cols[i - 1].items() if r >= j})
            table[i][j] = j + len(ech)
    return RankMatrix(n, tuple(tuple(row) for row in table))


# -- Borel subalgebras and the orbit-dimension oracle --------------------


def _algebra_ok(entries: dict[tuple[int, int], int], algebra: str, m: int) -> bool:
    x = IntMat([[entries.get((i, j), 0) for j in range(m)] for i in range(m)])
    return algebra_member(x, algebra)


@lru_cache(maxsize=None)
def algebra_basis(algebra: str, m: int) -> tuple[dict[tuple[int, int], int], ...]:
    """Sparse basis of the m x m matrix algebra, made of root vectors and a
    basis of its diagonal part (0-based keys)."""
    basis: list[dict[tuple[int, int], int]] = []
    if algebra in ("gl", "sl"):
        for a in range(m):
            for b in range(m):
                if a != b:
                    basis.append({(a, b): 1})
        if algebra == "gl":
            basis.extend({(a, a): 1} for a in range(m))
        else:
            basis.extend({(a, a): 1, (a + 1, a + 1): -1} for a in range(m - 1))
        return tuple(basis)
    seen = set()
    for a in range(m):
        for b in range(m):
            if (a, b) in seen:
                continue
            partner = (m - 1 - b, m - 1 - a)
            seen.update([(a, b), partner])
            if partner == (a, b):
                cands = [{(a, b): 1}]
            else:
                cands = [{(a, b): 1, partner: 1}, {(a, b): 1, partner: -1}]
            good = [c for c in cands if _algebra_ok(c, algebra, m)]
            if len(good) > 1:
                raise AssertionError("ambiguous basis pairing")
            basis.extend(good)
    return tuple(basis)


@lru_cache(maxsize=None)
def borel_basis(algebra: str, m: int) -> tuple[dict[tuple[int, int], int], ...]:
    """Basis of the upper-triangular (Borel) part of the algebra."""
    return tuple(
        e for e in algebra_basis(algebra, m) if all(a <= b for a, b in e)
    )


def _ad_image(z: Sparse, x_nz: Sparse) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for (a, b), v in z.items():
        for (c, d), w in x_nz.items():
            if b == c:
                out[(a, d)] = out.get((a, d), 0) + v * w
            if d == a:
                out[(c, b)] = out.get((c, b), 0) - w * v
    return out


def _check_member(x: IntMat, algebra: str) -> None:
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}")
    if not algebra_member(x, algebra):
        raise ValueError(f"matrix is not in {algebra}_{x.n}")


def borel_orbit_dim(x: IntMat, algebra: str) -> int:
    """dim B.x = rank of z -> [z, x] on the Borel subalgebra."""
    _check_member(x, algebra)
    nz = x.entries()
    return sparse_rank(_ad_image(z, nz) for z in borel_basis(algebra, x.n))


def negative_root_vector(algebra: str, m: int, entry: tuple[int, int]) -> dict:
    """The basis root vector of the algebra whose support contains the
    1-based lower-triangular ``entry``."""
    key = (entry[0] - 1, entry[1] - 1)
    for e in algebra_basis(algebra, m):
        if key in e:
            return e
    raise ValueError(f"no root vector at {entry} in {algebra}_{m}")


def parabolic_orbit_dim(x: IntMat, algebra: str, neg_root: Sparse) -> int:
    """dim of the orbit of x under the minimal parabolic b + k*neg_root."""
    _check_member(x, algebra)
    nz = x.entries()
    vectors = [_ad_image(z, nz) for z in borel_basis(algebra, x.n)]
    vectors.append(_ad_image(neg_root, nz))
    return sparse_rank(vectors)


def simple_neg_root_entry(kind: str, rank: int, i: int) -> tuple[int, int]:
    """A 1-based matrix entry inside the negative simple root vector for the
    i-th generator of the classical Weyl group of type ``kind``."""
    if not 1 <= i <= rank:
        raise ValueError(f"simple root index {i} out of range")
    if i < rank or kind == "A":
        return (i + 1, i)
    if kind == "D":
        return (rank + 1, rank - 1)
    return (rank + 1, rank)


def unipotent(neg_root: Sparse, m: int, t: int) -> tuple[IntMat, IntMat]:
    """exp(t*F) and exp(-t*F) for a root vector F with F^3 = 0, t even."""
    F = IntMat([[neg_root.get((i, j), 0) for j in range(m)] for i in range(m)])
    F2 = F @ F
    if not (F2 @ F).is_zero():
        raise ValueError("root vector with F^3 != 0")
    if (t * t) % 2 and not F2.is_zero():
        raise ValueError("odd t would leave the integers")
    half = (t * t) // 2 if not F2.is_zero() else 0
    I = identity(m)
    return I + F * t + F2 * half, I - F * t + F2 * half
