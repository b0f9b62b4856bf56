from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringex import exchange_matrix, flip, flip_path, label, make_word, reduce, reduce_to_bottom
from stringex.errors import NotAQuadrilateral, NotSameShuffleClass, PositionOutOfRange, ReductionNotApplicable
from stringex.generators import random_instance
from stringex.moves import IDENTITY, ReductionKind, effects_to_seq
from stringex.mutation import apply_seq, mutate

from published import A1, bfz_word, gls_word, tri_word


def flippable(word):
    return [p for p in range(1, len(word)) if word[p - 1].origin is not word[p].origin]


def test_flip_effects():
    w = tri_word()
    # positions 3 and 4 hold (1, B) and (1, T)
    new, effect = flip(w, 3)
    assert effect.vertex == label("1:2")
    assert exchange_matrix(new) == mutate(exchange_matrix(w), label("1:2"))
    w2 = make_word((2,), (1,), "BT", A1)
    new, effect = flip(w2, 1)
    assert effect is IDENTITY
    assert new.origins == "TB"


def test_flip_errors():
    w = tri_word()
    with pytest.raises(NotAQuadrilateral):
        flip(w, 4)
    with pytest.raises(PositionOutOfRange):
        flip(w, 8)
    with pytest.raises(PositionOutOfRange):
        flip(w, 0)


def test_flip_involution():
    rng = random.Random(21)
    for _ in range(300):
        w = random_instance(rng)
        for p in flippable(w):
            once, e1 = flip(w, p)
            twice, e2 = flip(once, p)
            assert twice == w
            assert e1 == e2


def test_flip_path_tri():
    w = tri_word()
    target = make_word(w.top, w.bottom, "TTTBBBBB", A1)
    path = flip_path(w, target)
    inversions = sum(
        1 for a in range(len(w)) for b in range(a + 1, len(w)) if w.origins[a] == "B" and w.origins[b] == "T"
    )
    assert len(path) == inversions
    seq = effects_to_seq([e for _, e in path])
    assert apply_seq(exchange_matrix(w), seq) == exchange_matrix(target)
    assert flip_path(w, w) == []
    with pytest.raises(NotSameShuffleClass):
        flip_path(w, make_word((1, 2, 3), (3, 1, 1, 2, 3), "BBBTTTBB", A1))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_flip_path_random(seed):
    rng = random.Random(seed)
    w = random_instance(rng)
    origins = list(w.origins)
    rng.shuffle(origins)
    target = make_word(w.top, w.bottom, "".join(origins), w.cartan)
    path = flip_path(w, target)
    seq = effects_to_seq([e for _, e in path])
    assert apply_seq(exchange_matrix(w), seq) == exchange_matrix(target)


def test_front_reduction():
    w = tri_word()
    after = reduce(w, ReductionKind.L_d)
    assert after.top == (3, 1, 2, 3)
    assert after.bottom == (1, 1, 3, 2)
    assert after.origins == "TBBTTTBB"
    assert exchange_matrix(after) == exchange_matrix(w)
    assert reduce(after, ReductionKind.L_u) == w
    with pytest.raises(ReductionNotApplicable):
        reduce(w, ReductionKind.L_u)
    with pytest.raises(ReductionNotApplicable):
        reduce(w, ReductionKind.R_u)


def test_reduction_kind_parse():
    assert ReductionKind.parse("L_d") is ReductionKind.L_d
    assert ReductionKind.parse("ru") is ReductionKind.R_u
    with pytest.raises(ValueError):
        ReductionKind.parse("Xd")


@pytest.mark.parametrize(
    "make, bottom",
    [(tri_word, (3, 2, 1, 3, 1, 1, 3, 2)), (bfz_word, (1, 2, 1, 1, 2, 1))],
)
def test_reduce_to_bottom_published(make, bottom):
    w = make()
    r = reduce_to_bottom(w)
    assert r.bottom.values == bottom
    assert r.bottom.is_all_bottom()
    B = apply_seq(exchange_matrix(r.bottom), r.mutations).relabeled(r.label_map)
    assert B == exchange_matrix(w)


def test_reduce_to_bottom_already_bottom():
    w = gls_word()
    r = reduce_to_bottom(w)
    assert r.bottom == w
    assert r.mutations == []
    assert all(k == v for k, v in r.label_map.items())
