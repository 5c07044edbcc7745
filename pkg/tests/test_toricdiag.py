from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borelorbits.toricdiag import (
    EXAMPLE_CHARACTERS,
    EXAMPLE_RAYS,
    RatCone,
    dual_cone_rays,
    gorenstein_check,
    torus_point,
    z_variety_check,
)


def test_example_cone_not_gorenstein():
    res = gorenstein_check(RatCone(EXAMPLE_RAYS))
    assert not res
    w = res.witness
    combo = [sum(wi * r[k] for wi, r in zip(w, EXAMPLE_RAYS)) for k in range(3)]
    assert combo == [0, 0, 0] and sum(w) != 0


def test_orthant_is_gorenstein():
    res = gorenstein_check(RatCone([(2, 0, 0), (0, 1, 0), (0, 0, 3)]))
    assert res and res.functional == (1, 1, 1)


def test_lower_dimensional_cone():
    c = RatCone([(1, 1, 0), (1, -1, 0)])
    assert c.dim == 2
    assert gorenstein_check(c)


@pytest.mark.parametrize("rays", [[], [(0, 0, 0)], [(1, 0), (1, 0, 0)]])
def test_bad_cones(rays):
    with pytest.raises(ValueError):
        RatCone(rays)


def test_torus_points():
    A, v = torus_point(1, 1, 1)
    assert A == [[1, -1], [1, -1]] and v == [1, 1]
    with pytest.raises(ValueError):
        torus_point(0, 1, 1)
    assert z_variety_check(100)["passed"] == 100


def test_cone_comes_from_torus_characters():
    assert dual_cone_rays(EXAMPLE_CHARACTERS) == sorted(EXAMPLE_RAYS)


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(4)), st.lists(st.integers(1, 5), min_size=4, max_size=4))
def test_gorenstein_invariant_under_permutation_and_scaling(perm, scales):
    rays = [tuple(s * x for x in EXAMPLE_RAYS[i]) for i, s in zip(perm, scales)]
    assert not gorenstein_check(RatCone(rays))
    ok_rays = [tuple(s * x for x in r) for r, s in zip([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)], scales)]
    assert gorenstein_check(RatCone([ok_rays[i] for i in perm]))


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(bool),
       st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(bool),
       st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(bool))
def test_torus_points_lie_on_z(t1, t2, t3):
    A, v = torus_point(t1, t2, t3)
    assert all(sum(A[i][k] * A[k][j] for k in range(2)) == 0 for i in range(2) for j in range(2))
    assert all(sum(A[i][k] * v[k] for k in range(2)) == Fraction(0) for i in range(2))
