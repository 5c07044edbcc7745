from __future__ import annotations

import pytest

from borelorbits.exmat import rank_matrix
from borelorbits.fixtures import F4_LONG_POSITIVE
from borelorbits.minimal_orbit import min_orbit_poset, min_orbit_weak_edges, raising_parabolic_min
from borelorbits.rootsys import build_root_system, long_roots
from oracles import min_orbit_closure_oracle, root_vector_matrices

TYPES = [("A", 1), ("A", 3), ("A", 4), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4), ("D", 5), ("G", 2), ("F", 4)]


@pytest.mark.parametrize("kind,rank", TYPES)
def test_poset_shape(kind, rank):
    P = min_orbit_poset(kind, rank)
    assert len(P.nodes) == len(long_roots(build_root_system(kind, rank)))
    assert P.nodes[0] == P.source == P.rs.highest_root
    assert P.nodes[-1] == P.sink
    assert P.dim(P.source) == 1
    for a in P.nodes:
        assert P.leq(P.source, a) and P.leq(a, P.sink)
    for a, b in P.hasse_edges:
        assert P.leq(a, b) and a != b


def test_a1():
    P = min_orbit_poset("A", 1)
    assert [str(r) for r in P.nodes] == ["(1)", "-(1)"]


@pytest.mark.parametrize("kind,rank", TYPES)
def test_closure_matches_abstract_bruhat(kind, rank):
    _, leq = min_orbit_closure_oracle(kind, rank)
    P = min_orbit_poset(kind, rank)
    for a in P.nodes:
        for b in P.nodes:
            assert P.leq(a, b) == leq(a, b), (a, b)


@pytest.mark.parametrize("kind,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)])
def test_closure_matches_subword_bruhat(kind, rank):
    """Second oracle: subwords of minimal coset representative words."""
    reps, _ = min_orbit_closure_oracle(kind, rank)
    P = min_orbit_poset(kind, rank)
    rs = P.rs
    words = {rho: w for rho, (_, w) in reps.items()}

    def act(word, rho):
        r = rs.root(rho)
        for i in reversed(word):
            r = rs.reflect(r, i)
        return r

    from itertools import combinations

    beta = rs.highest_root.coeffs
    for b in P.nodes:
        wb = words[b.coeffs]
        reachable = {act(sub, beta) for k in range(len(wb) + 1) for sub in combinations(wb, k)}
        for a in P.nodes:
            assert P.leq(a, b) == (a in reachable), (a, b)


@pytest.mark.parametrize("kind,rank", [("A", 3), ("A", 4), ("B", 3), ("B", 4), ("C", 3), ("C", 4)])
def test_closure_matches_matrix_rank_criterion(kind, rank):
    X = root_vector_matrices(kind, rank)
    P = min_orbit_poset(kind, rank)
    R = {a: rank_matrix(X[a.coeffs], generic=True) for a in P.nodes}
    for a in P.nodes:
        for b in P.nodes:
            assert P.leq(a, b) == R[a].leq(R[b]), (a, b)


@pytest.mark.parametrize("kind,rank", [("D", 4), ("D", 5)])
def test_closure_implies_rank_dominance_type_d(kind, rank):
    X = root_vector_matrices(kind, rank)
    P = min_orbit_poset(kind, rank)
    R = {a: rank_matrix(X[a.coeffs], generic=True) for a in P.nodes}
    for a in P.nodes:
        for b in P.nodes:
            if P.leq(a, b):
                assert R[a].leq(R[b])


@pytest.mark.parametrize("kind,rank", [("G", 2), ("F", 4), ("B", 3), ("C", 4)])
def test_closure_is_reversed_root_order(kind, rank):
    P = min_orbit_poset(kind, rank)
    for a in P.nodes:
        for b in P.nodes:
            assert P.leq(a, b) == P.dominance_leq(a, b)


def test_reversed_root_order_overshoots_in_a3():
    P = min_orbit_poset("A", 3)
    rs = P.rs
    a, b = rs.root((1, 0, 0)), -rs.root((0, 0, 1))
    assert P.dominance_leq(a, b)
    assert not P.leq(a, b)
    X = root_vector_matrices("A", 3)
    assert not rank_matrix(X[a.coeffs], generic=True).leq(rank_matrix(X[b.coeffs], generic=True))


def test_g2_chain_and_labels():
    P = min_orbit_poset("G", 2)
    assert [r.coeffs for r in P.nodes] == [(3, 2), (3, 1), (0, 1), (0, -1), (-3, -1), (-3, -2)]
    assert [raising_parabolic_min(r) for r in P.nodes[:-1]] == [2, 1, 2, 1, 2]
    assert list(P.dims) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(ValueError):
        raising_parabolic_min(P.sink)


def test_f4_long_roots():
    P = min_orbit_poset("F", 4)
    assert len(P.nodes) == 24
    assert {r.coeffs for r in P.nodes if r.is_positive} == set(F4_LONG_POSITIVE)
    assert P.dims[-1] == 16


@pytest.mark.parametrize("kind,rank", [("F", 4), ("D", 4), ("G", 2)])
def test_weak_edges_raise_dimension_by_one(kind, rank):
    P = min_orbit_poset(kind, rank)
    for a, b, i in min_orbit_weak_edges(P.rs):
        assert P.dim(b) == P.dim(a) + 1
        assert P.leq(a, b)
