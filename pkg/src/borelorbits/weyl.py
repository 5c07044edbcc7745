"""Weyl groups of classical type as subgroups of symmetric groups.

Type A_{n-1} is S_n with s_i = (i, i+1).  The others sit inside a symmetric
group through their matrix realisation:

* C_n inside S_{2n}, generators c_i = s_i s_{2n-i} (i < n) and c_n = s_n;
* B_r inside S_{2r+1}, b_i = s_i s_{n-i} (i < r) and b_r = s_r s_{r+1} s_r;
* D_r inside S_{2r}, d_i = s_i s_{n-i} (i < r) and d_r = s_r s_{r-1} s_{r+1} s_r.

Permutations are tuples in one-line notation with 1-based values, and
products compose right to left: ``(u * v)(i) = u(v(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "GEN_LETTER",
    "WeylElement",
    "WeylGroup",
    "CosetRepSet",
    "weyl_group",
    "symmetric_group",
    "simple_reflection",
    "length",
    "bruhat_leq",
    "min_coset_reps",
    "stabilizer_subgroup_A",
    "set_stabilizer_gens",
    "parse_word",
    "perm_mul",
    "perm_inv",
    "transposition",
]

GEN_LETTER = {"A": "s", "B": "b", "C": "c", "D": "d"}

Perm = tuple[int, ...]


def perm_mul(u: Perm, v: Perm) -> Perm:
    return tuple(u[i - 1] for i in v)


def perm_inv(u: Perm) -> Perm:
    out = [0] * len(u)
    for i, ui in enumerate(u, 1):
        out[ui - 1] = i
    return tuple(out)


def transposition(m: int, i: int) -> Perm:
    """s_i in S_m."""
    p = list(range(1, m + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _word_perm(m: int, word: Iterable[int]) -> Perm:
    p = tuple(range(1, m + 1))
    for i in word:
        p = perm_mul(p, transposition(m, i))
    return p


def _ambient_size(kind: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[kind]


def _generator_words(kind: str, rank: int) -> list[list[int]]:
    """Each Coxeter generator as a word in the ambient s_j."""
    m = _ambient_size(kind, rank)
    if kind == "A":
        return [[i] for i in range(1, rank + 1)]
    if kind == "C":
        return [[i, m - i] for i in range(1, rank)] + [[rank]]
    r = rank
    words = [[i, m - i] for i in range(1, r)]
    if kind == "B":
        words.append([r, r + 1, r])
    else:
        words.append([r, r - 1, r + 1, r])
    return words


@dataclass(frozen=True, order=True)
class WeylElement:
    perm: Perm
    group: tuple[str, int]

    def __mul__(self, other: WeylElement) -> WeylElement:
        if self.group != other.group:
            raise ValueError(f"elements of different groups {self.group}, {other.group}")
        return WeylElement(perm_mul(self.perm, other.perm), self.group)

    def inverse(self) -> WeylElement:
        return WeylElement(perm_inv(self.perm), self.group)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    @property
    def W(self) -> WeylGroup:
        return weyl_group(*self.group)

    @property
    def length(self) -> int:
        return self.W.length[self.perm]

    def word(self) -> tuple[int, ...]:
        return self.W.reduced_word(self.perm)

    def label(self) -> str:
        w = self.word()
        if not w:
            return "1"
        letter = GEN_LETTER[self.group[0]]
        return "".join(f"{letter}{i}" for i in w)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.perm, 1))

    def __str__(self) -> str:
        return self.label()


class WeylGroup:
    """A finite Weyl group enumerated as a set of ambient permutations."""

    def __init__(self, kind: str, rank: int):
        if kind not in GEN_LETTER:
            raise ValueError(f"unsupported Weyl group type {kind!r}")
        if rank < 1 or (kind == "D" and rank < 2) or (kind in "BC" and rank < 1):
            raise ValueError(f"bad rank {rank} for type {kind}")
        self.kind = kind
        self.rank = rank
        self.m = _ambient_size(kind, rank)
        self.tag = (kind, rank)
        self.gen_words = _generator_words(kind, rank)
        self.gens: tuple[Perm, ...] = tuple(_word_perm(self.m, w) for w in self.gen_words)
        self.identity_perm: Perm = tuple(range(1, self.m + 1))
        # breadth-first search from the identity gives the Coxeter length
        length = {self.identity_perm: 0}
        frontier = [self.identity_perm]
        while frontier:
            nxt = []
            for w in frontier:
                for g in self.gens:
                    gw = perm_mul(g, w)
                    if gw not in length:
                        length[gw] = length[w] + 1
                        nxt.append(gw)
            frontier = nxt
        self.length: dict[Perm, int] = length
        self.elements: list[Perm] = sorted(length, key=lambda p: (length[p], p))
        self._words: dict[Perm, tuple[int, ...]] = {self.identity_perm: ()}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"WeylGroup({self.kind}{self.rank}, |W|={len(self)})"

    def element(self, perm: Sequence[int]) -> WeylElement:
        perm = tuple(perm)
        if perm not in self.length:
            raise ValueError(f"{perm} is not in W({self.kind}{self.rank})")
        return WeylElement(perm, self.tag)

    def identity(self) -> WeylElement:
        return WeylElement(self.identity_perm, self.tag)

    def gen(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator index {i} out of range 1..{self.rank}")
        return WeylElement(self.gens[i - 1], self.tag)

    def all(self) -> list[WeylElement]:
        return [WeylElement(p, self.tag) for p in self.elements]

    def left_descents(self, perm: Perm) -> list[int]:
        lw = self.length[perm]
        return [
            i for i, g in enumerate(self.gens, 1) if self.length[perm_mul(g, perm)] < lw
        ]

    def reduced_word(self, perm: Perm) -> tuple[int, ...]:
        """Lexicographically least reduced word."""
        word = self._words.get(perm)
        if word is None:
            i = self.left_descents(perm)[0]
            word = (i,) + self.reduced_word(perm_mul(self.gens[i - 1], perm))
            self._words[perm] = word
        return word

    def from_word(self, word: Iterable[int]) -> WeylElement:
        p = self.identity_perm
        for i in word:
            p = perm_mul(p, self.gens[i - 1])
        return WeylElement(p, self.tag)


@lru_cache(maxsize=None)
def weyl_group(kind: str, rank: int) -> WeylGroup:
    return WeylGroup(kind, rank)


def symmetric_group(n: int) -> WeylGroup:
    return weyl_group("A", n - 1)


def simple_reflection(group_tag: tuple[str, int], i: int) -> WeylElement:
    return weyl_group(*group_tag).gen(i)


def length(w: WeylElement) -> int:
    return w.length


def _ambient_rank_table(p: Perm) -> list[list[int]]:
    """t[i][j] = #{a <= i : p(a) >= j}."""
    m = len(p)
    t = [[0] * (m + 2) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, m + 2):
            t[i][j] = t[i - 1][j] + (p[i - 1] >= j)
    return t


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order, tested in the ambient symmetric group.

    For D the ambient order is coarser than the intrinsic one, so type D
    uses the lifting property in the group itself.
    """
    if u.group != v.group:
        raise ValueError(f"elements of different groups {u.group}, {v.group}")
    if u.group[0] == "D":
        return _bruhat_lifting(u.W, u.perm, v.perm)
    if u.length > v.length:
        return False
    tu, tv = _ambient_rank_table(u.perm), _ambient_rank_table(v.perm)
    return all(a <= b for ru, rv in zip(tu, tv) for a, b in zip(ru, rv))


def _bruhat_lifting(W: WeylGroup, u: Perm, v: Perm) -> bool:
    cache = _lifting_cache(W.tag)
    key = (u, v)
    if key in cache:
        return cache[key]
    lu, lv = W.length[u], W.length[v]
    if lu > lv:
        res = False
    elif lv == 0:
        res = lu == 0
    else:
        i = W.left_descents(v)[0]
        g = W.gens[i - 1]
        sv = perm_mul(g, v)
        su = perm_mul(g, u)
        if W.length[su] < lu:
            res = _bruhat_lifting(W, su, sv)
        else:
            res = _bruhat_lifting(W, u, sv)
    cache[key] = res
    return res


@lru_cache(maxsize=None)
def _lifting_cache(tag) -> dict:
    return {}


@dataclass(frozen=True)
class CosetRepSet:
    """Minimal length representatives of the left cosets w W_P."""

    group: tuple[str, int]
    parabolic: tuple[int, ...]
    reps: tuple[WeylElement, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __contains__(self, w: WeylElement) -> bool:
        return w in self._set

    @property
    def _set(self) -> frozenset[WeylElement]:
        return _rep_set(self)


@lru_cache(maxsize=None)
def _rep_set(c: CosetRepSet) -> frozenset[WeylElement]:
    return frozenset(c.reps)


@lru_cache(maxsize=None)
def min_coset_reps(group_tag: tuple[str, int], parabolic_generators: tuple[int, ...]) -> CosetRepSet:
    W = weyl_group(*group_tag)
    gens = tuple(sorted(set(parabolic_generators)))
    for i in gens:
        W.gen(i)  # range check
    reps = [
        WeylElement(p, W.tag)
        for p in W.elements
        if all(W.length[perm_mul(p, W.gens[i - 1])] > W.length[p] for i in gens)
    ]
    return CosetRepSet(W.tag, gens, tuple(reps))


def set_stabilizer_gens(group_tag: tuple[str, int], k: int) -> tuple[int, ...]:
    """Indices of the simple reflections mapping {1..k} onto itself."""
    W = weyl_group(*group_tag)
    block = set(range(1, k + 1))
    return tuple(
        i for i, g in enumerate(W.gens, 1) if {g[a - 1] for a in block} == block
    )


def stabilizer_subgroup_A(n: int, r: int) -> frozenset[WeylElement]:
    """Permutation matrices commuting with x_r: blocks {1..r}, middle and
    {n-r+1..n} are preserved, and the first and last blocks move in step."""
    if 2 * r > n:
        raise ValueError("need 2r <= n")
    tag = ("A", n - 1)
    mid = list(range(r + 1, n - r + 1))
    out = set()
    for head in _perms(r):
        for middle in _perms(len(mid)):
            p = [0] * n
            for j in range(r):
                p[j] = head[j]
                p[n - r + j] = n - r + head[j]
            for k, a in enumerate(mid):
                p[a - 1] = mid[middle[k] - 1]
            out.add(WeylElement(tuple(p), tag))
    return frozenset(out)


def _perms(k: int) -> list[Perm]:
    from itertools import permutations

    return [tuple(p) for p in permutations(range(1, k + 1))]


_TOKEN = re.compile(r"([a-zA-Z])_?(\d+)")


def parse_word(group_tag: tuple[str, int], text: str) -> WeylElement:
    """'c2c1c2' -> c2*c1*c2.  '1', 'id' and '' denote the identity."""
    W = weyl_group(*group_tag)
    s = text.replace(" ", "").replace("*", "").replace("·", "")
    if s in ("", "1", "id", "e"):
        return W.identity()
    pos = 0
    word = []
    letter = GEN_LETTER[W.kind]
    for mt in _TOKEN.finditer(s):
        if mt.start() != pos:
            break
        if mt.group(1).lower() not in (letter, "s" if W.kind == "A" else letter):
            raise ValueError(f"generator {mt.group(0)!r} does not belong to {W.kind}{W.rank}")
        word.append(int(mt.group(2)))
        pos = mt.end()
    if pos != len(s):
        raise ValueError(f"cannot parse word {text!r}")
    for i in word:
        W.gen(i)
    return W.from_word(word)


def parabolic_factor(sigma: WeylElement, i: int, parabolic: Sequence[int]) -> int | None:
    """For sigma a minimal coset representative with g_i*sigma outside the
    representatives, the index j with g_i*sigma = sigma*g_j (Deodhar)."""
    W = sigma.W
    conj = sigma.inverse() * W.gen(i) * sigma
    for j in parabolic:
        if W.gens[j - 1] == conj.perm:
            return j
    return None
