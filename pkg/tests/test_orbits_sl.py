from __future__ import annotations

from math import comb

import pytest

from borelorbits.exmat import algebra_member, borel_orbit_dim, nilpotency_order, rank_matrix
from borelorbits.orbits_sl import (
    closure_leq_A,
    dim_A,
    enumerate_A,
    link_pattern_A,
    orbit_of_A,
    representative_A,
    weak_covers_A,
)
from oracles import exp_raise_rank_matrix


def test_counts_4_2():
    ids = enumerate_A(4, 2)
    assert len(ids) == 12
    assert len({str(o) for o in ids}) == 12


@pytest.mark.parametrize("n,r", [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3)])
def test_count_matches_coset_formula(n, r):
    # |S_n| / |S_r x S_{n-2r} x S_r| cosets, times |S_r| for w
    from math import factorial

    expected = factorial(n) // (factorial(r) * factorial(n - 2 * r) * factorial(r)) * factorial(r)
    assert len(enumerate_A(n, r)) == expected


@pytest.mark.parametrize("bad", [(4, 3), (1, 0), (3, -1)])
def test_invalid_parameters(bad):
    with pytest.raises(ValueError):
        enumerate_A(*bad)


@pytest.mark.parametrize("n,r", [(4, 2), (5, 2), (5, 1)])
def test_representatives(n, r):
    mats = set()
    for oid in enumerate_A(n, r):
        x = representative_A(oid)
        assert algebra_member(x, "sl")
        assert nilpotency_order(x) == (2 if r else 1)
        assert x.rank() == r
        mats.add(rank_matrix(x))
    assert len(mats) == len(enumerate_A(n, r))


def test_dimension_formula_against_oracle():
    for n in range(2, 6):
        for r in range(n // 2 + 1):
            for oid in enumerate_A(n, r):
                assert dim_A(oid) == oid.sigma.length + oid.w.length + comb(r + 1, 2)
                assert dim_A(oid) == borel_orbit_dim(representative_A(oid), "sl")


def test_closure_criteria_agree():
    for n, r in [(4, 2), (5, 2), (4, 1)]:
        ids = enumerate_A(n, r)
        for a in ids:
            for b in ids:
                assert closure_leq_A(a, b) == closure_leq_A(a, b, "rank")


def test_closure_is_graded_by_dimension():
    ids = enumerate_A(4, 2)
    for a in ids:
        for b in ids:
            if a != b and closure_leq_A(a, b):
                assert dim_A(a) < dim_A(b)


def test_link_patterns():
    for oid in enumerate_A(4, 2):
        arcs = link_pattern_A(oid)
        assert len(arcs) == 2
        ends = [p for arc in arcs for p in arc]
        assert len(set(ends)) == 4
        x = representative_A(oid)
        assert {(b, a) for a, b in arcs} == {(i + 1, j + 1) for i, j in x.entries()}


def test_orbit_of_round_trip():
    for oid in enumerate_A(4, 2):
        assert orbit_of_A(4, 2, oid.sigma * oid.w) == oid


@pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (5, 2), (5, 1)])
def test_weak_covers_match_exp_raise(n, r):
    ids = enumerate_A(n, r)
    by_rank = {rank_matrix(representative_A(o)): o for o in ids}
    for oid in ids:
        x = representative_A(oid)
        covers = {k: t for k, t, kind in weak_covers_A(oid)}
        assert all(kind == "U" for _, _, kind in weak_covers_A(oid))
        for i in range(1, n):
            rm = exp_raise_rank_matrix(x, "sl", "A", n - 1, i)
            raised = by_rank[rm]
            if raised == oid:
                assert i not in covers
            else:
                assert covers[i] == raised
                assert dim_A(raised) == dim_A(oid) + 1
