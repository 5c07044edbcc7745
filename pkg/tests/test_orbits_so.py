from __future__ import annotations

from fractions import Fraction

import pytest

from borelorbits.exmat import algebra_member, bracket, nilpotency_order, rank_matrix
from borelorbits.orbits_so import (
    dim_BD,
    enumerate_BD2,
    enumerate_BD3,
    enumerate_fpf_index,
    nonnormal_block_matrix,
    nonnormal_polynomials,
    nonnormal_sample_check,
    f_indices,
    g2_dimension,
    orbit_rank_BD3,
    raises,
    representative_BD2,
    representative_BD3,
    rule_gaps,
    sl2_triple,
    so_weyl_tag,
    weak_covers_BD,
)


def test_weyl_tags():
    assert so_weyl_tag(7) == ("B", 3)
    assert so_weyl_tag(8) == ("D", 4)


def test_fpf_index_sizes():
    # fixed-point-free involutions of 2s points: (2s-1)!!
    assert [len(enumerate_fpf_index(s)) for s in (1, 2, 3)] == [1, 3, 15]


@pytest.mark.parametrize("n,s", [(5, 1), (6, 1), (7, 1), (8, 1), (8, 2)])
def test_bd2_representatives(n, s):
    ids = enumerate_BD2(n, s)
    for oid in ids:
        x = representative_BD2(oid)
        assert algebra_member(x, "so")
        assert nilpotency_order(x) == 2
        assert x.rank() == 2 * s
    assert len({rank_matrix(representative_BD2(o)) for o in ids}) == len(ids)


def test_very_even_doubles_the_orbits():
    ids = enumerate_BD2(8, 2)
    twisted = [o for o in ids if o.very_even_twist]
    assert len(twisted) * 2 == len(ids)
    assert all(o.label.startswith("m") for o in twisted)
    assert not any(o.very_even_twist for o in enumerate_BD2(8, 1))


@pytest.mark.parametrize("bad", [(7, 2), (3, 1), (8, 0)])
def test_bd2_invalid(bad):
    with pytest.raises(ValueError):
        enumerate_BD2(*bad)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_bd3_representatives(n):
    assert f_indices(n) == tuple(range(1, (n - 1) // 2 + 1))
    for oid in enumerate_BD3(n):
        z = representative_BD3(oid)
        assert algebra_member(z, "so")
        assert nilpotency_order(z) == 3
        assert z.rank() == 2
        assert (z @ z).rank() == 1
        assert orbit_rank_BD3(oid) == (1 if n % 2 and oid.i == n // 2 else 2)


@pytest.mark.parametrize("spec", [("BD2", 5, 1), ("BD2", 6, 1), ("BD2", 7, 1), ("BD2", 8, 2), ("BD3", 5), ("BD3", 6), ("BD3", 7)])
def test_covers_raise_dimension_and_are_complete(spec):
    ids = enumerate_BD2(*spec[1:]) if spec[0] == "BD2" else enumerate_BD3(spec[1])
    for oid in ids:
        assert rule_gaps(oid) == []
        for k, t, kind in weak_covers_BD(oid):
            assert kind in "UN"
            assert dim_BD(t) == dim_BD(oid) + 1
            if not getattr(oid, "very_even_twist", False):
                assert raises(oid, k)


def test_bd2_edges_all_u():
    for oid in enumerate_BD2(7, 1):
        assert all(kind == "U" for _, _, kind in weak_covers_BD(oid))


def test_bd3_n5_graph_shape():
    ids = enumerate_BD3(5)
    edges = [(str(o), str(t), k, kind) for o in ids for k, t, kind in weak_covers_BD(o)]
    assert len(edges) == 8
    dims = {str(o): dim_BD(o) for o in ids}
    assert dims["(b2b1, f_2)"] == 4


@pytest.mark.parametrize("n", [5, 6, 7])
def test_sl2_triple(n):
    x, y, h = sl2_triple(n)
    assert bracket(x, y) == h
    assert bracket(h, x) == x * 2
    assert bracket(h, y) == y * -2
    assert g2_dimension(n) == n - 2


def test_nonnormal_polynomials_vanish_on_samples():
    rep = nonnormal_sample_check(100, seed=3)
    assert rep["passed"] == 100 and rep["failed"] == 0


def test_nonnormal_polynomials_detect_points_off_z():
    F = Fraction
    C = [[F(1), F(0), F(0)], [F(0), F(0), F(0)], [F(0), F(0), F(-1)]]
    y = [F(1), F(0), F(0)]
    assert nonnormal_polynomials(C, y) != (0, 0)
    assert len(nonnormal_block_matrix(C, y)) == 5
