from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borelorbits.rootsys import (
    build_root_system,
    inner_product,
    long_roots,
    parse_root,
    parse_type,
    root_leq,
)

ROOT_COUNTS = [
    ("A", 1, 2, 2),
    ("A", 4, 20, 20),
    ("B", 2, 8, 4),
    ("B", 4, 32, 24),
    ("C", 3, 18, 6),
    ("D", 4, 24, 24),
    ("D", 5, 40, 40),
    ("G", 2, 12, 6),
    ("F", 4, 48, 24),
    ("E", 6, 72, 72),
    ("E", 7, 126, 126),
    ("E", 8, 240, 240),
]


@pytest.mark.parametrize("kind,rank,total,n_long", ROOT_COUNTS)
def test_root_and_long_root_counts(kind, rank, total, n_long):
    rs = build_root_system(kind, rank)
    assert len(rs.roots) == total
    assert len(long_roots(rs)) == n_long


@pytest.mark.parametrize(
    "kind,rank,highest",
    [("A", 3, (1, 1, 1)), ("B", 3, (1, 2, 2)), ("C", 3, (2, 2, 1)), ("G", 2, (3, 2)),
     ("F", 4, (2, 4, 3, 2)), ("E", 7, (2, 2, 3, 4, 3, 2, 1))],
)
def test_highest_root(kind, rank, highest):
    assert build_root_system(kind, rank).highest_root.coeffs == highest


def test_highest_root_is_long_and_dominant():
    for kind, rank in [("B", 4), ("C", 4), ("F", 4), ("G", 2), ("E", 6)]:
        rs = build_root_system(kind, rank)
        beta = rs.highest_root
        assert beta in long_roots(rs)
        assert all(rs.pairing(beta, i) >= 0 for i in range(1, rank + 1))


@pytest.mark.parametrize("bad", [("A", 0), ("D", 2), ("E", 5), ("G", 3), ("X", 3)])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build_root_system(*bad)


def test_parse_type_and_root():
    assert parse_type("F4") == ("F", 4)
    rs = build_root_system("F", 4)
    assert parse_root("-(0011)", rs) == -rs.root((0, 0, 1, 1))
    assert parse_root("2,4,3,2", rs) == rs.highest_root
    with pytest.raises(ValueError):
        parse_root("(9999)", rs)


def test_reflections_permute_roots():
    for kind, rank in [("B", 3), ("C", 3), ("F", 4), ("G", 2)]:
        rs = build_root_system(kind, rank)
        roots = set(rs.roots)
        for i in range(1, rank + 1):
            assert {rs.reflect(r, i) for r in roots} == roots
            assert rs.reflect(rs.simple_root(i), i) == -rs.simple_root(i)


def test_inner_product_is_w_invariant():
    rs = build_root_system("F", 4)
    roots = rs.roots
    for a in roots[::7]:
        for b in roots[::5]:
            ab = inner_product(rs, a, b)
            assert ab == inner_product(rs, b, a)
            for i in range(1, 5):
                assert inner_product(rs, rs.reflect(a, i), rs.reflect(b, i)) == ab


F4 = build_root_system("F", 4)
f4_roots = st.sampled_from(F4.roots)


@settings(max_examples=200, deadline=None)
@given(f4_roots, f4_roots, f4_roots)
def test_root_leq_is_a_partial_order(a, b, c):
    assert root_leq(a, a)
    if root_leq(a, b) and root_leq(b, a):
        assert a == b
    if root_leq(a, b) and root_leq(b, c):
        assert root_leq(a, c)


def test_root_leq_rejects_mixed_systems():
    with pytest.raises(ValueError):
        root_leq(F4.highest_root, build_root_system("B", 4).highest_root)
