from __future__ import annotations

from math import factorial

import pytest

from borelorbits.weyl import (
    bruhat_leq,
    min_coset_reps,
    parabolic_factor,
    parse_word,
    set_stabilizer_gens,
    stabilizer_subgroup_A,
    symmetric_group,
    weyl_group,
)
from oracles import subword_leq


@pytest.mark.parametrize(
    "kind,rank,order",
    [("A", 3, 24), ("B", 2, 8), ("B", 3, 48), ("C", 3, 48), ("D", 3, 24), ("D", 4, 192)],
)
def test_group_orders(kind, rank, order):
    assert len(weyl_group(kind, rank)) == order


def test_symmetric_group():
    assert len(symmetric_group(5)) == factorial(5)


@pytest.mark.parametrize("kind,rank", [("B", 2), ("B", 3), ("C", 3), ("D", 3), ("D", 4), ("A", 3)])
def test_lengths_and_words(kind, rank):
    W = weyl_group(kind, rank)
    for w in W.all():
        word = w.word()
        assert len(word) == w.length
        assert W.from_word(word) == w
        for i in range(1, rank + 1):
            assert abs((W.gen(i) * w).length - w.length) == 1
    longest = max(W.all(), key=lambda w: w.length)
    assert longest.length == max(w.length for w in W.all())


def test_generators_are_involutions():
    for kind, rank in [("B", 3), ("C", 3), ("D", 4)]:
        W = weyl_group(kind, rank)
        for i in range(1, rank + 1):
            assert (W.gen(i) * W.gen(i)).is_identity


@pytest.mark.parametrize("kind,rank", [("B", 2), ("C", 2), ("B", 3), ("C", 3), ("D", 3), ("A", 3)])
def test_bruhat_matches_subword_property(kind, rank):
    els = weyl_group(kind, rank).all()
    for u in els:
        for v in els:
            assert bruhat_leq(u, v) == subword_leq(u, v), (u, v)


def test_bruhat_matches_subword_property_d4_sample():
    els = weyl_group("D", 4).all()
    for u in els[::5]:
        for v in els[::3]:
            assert bruhat_leq(u, v) == subword_leq(u, v), (u, v)


def test_min_coset_reps_c2():
    reps = min_coset_reps(("C", 2), (1,))
    assert sorted(w.label() for w in reps) == sorted(["1", "c2", "c1c2", "c2c1c2"])
    for w in reps:
        assert (w * w.W.gen(1)).length > w.length


def test_min_coset_reps_count():
    W = weyl_group("C", 3)
    gens = set_stabilizer_gens(("C", 3), 3)
    reps = min_coset_reps(("C", 3), gens)
    assert len(reps) == len(W) // factorial(3)


def test_stabilizer_subgroup_a42():
    S = stabilizer_subgroup_A(4, 2)
    assert len(S) == 2
    assert sorted(w.label() for w in S) == ["1", "s1s3"]


def test_parse_word_round_trip():
    w = parse_word(("C", 2), "c2c1c2")
    assert w.label() == "c2c1c2"
    assert parse_word(("C", 2), "1").is_identity
    with pytest.raises(ValueError):
        parse_word(("C", 2), "c3")


def test_parabolic_factor_c2():
    W = weyl_group("C", 2)
    for sigma in min_coset_reps(("C", 2), (1,)):
        for i in (1, 2):
            j = parabolic_factor(sigma, i, (1,))
            if j is not None:
                assert W.gen(i) * sigma == sigma * W.gen(j)
