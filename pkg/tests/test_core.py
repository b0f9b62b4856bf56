from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringex import BOTTOM, TOP, bottom_word, make_word, validate_cartan
from stringex.errors import LengthMismatch, LetterOutOfRange, NotGeneralizedCartan, NotSymmetrizable
from stringex.generators import random_cartan

from published import A_PRIME, tri_word


@pytest.mark.parametrize(
    "entries, sym",
    [
        ([[2, -1], [-1, 2]], (1, 1)),
        ([[2, -6], [-3, 2]], (1, 2)),
        ([[2, -6, -8], [-3, 2, -10], [-4, -10, 2]], (1, 2, 2)),
        ([[2, 0], [0, 2]], (1, 1)),
        ([[2]], (1,)),
    ],
)
def test_symmetrizer(entries, sym):
    A = validate_cartan(entries)
    assert A.symmetrizer == sym
    n = len(entries)
    for i in range(n):
        for j in range(n):
            assert sym[i] * entries[i][j] == sym[j] * entries[j][i]


@pytest.mark.parametrize(
    "entries",
    [[[2, -1], [0, 2]], [[2, 1], [1, 2]], [[3, -1], [-1, 2]], [[2, -1, 0]], []],
)
def test_not_cartan(entries):
    with pytest.raises(NotGeneralizedCartan):
        validate_cartan(entries)


def test_not_symmetrizable():
    # ratio around the cycle 1-2-3 is 2 * 1 * 1 != 1
    with pytest.raises(NotSymmetrizable):
        validate_cartan([[2, -2, -1], [-1, 2, -1], [-1, -1, 2]])


def test_make_word_shuffle():
    w = tri_word()
    assert w.values == (3, 1, 1, 1, 2, 3, 3, 2)
    assert w.top == (1, 2, 3)
    assert w.bottom == (3, 1, 1, 3, 2)
    assert w.origins == "BBBTTTBB"


def test_make_word_errors():
    A = validate_cartan([[2, -1], [-1, 2]])
    with pytest.raises(LengthMismatch):
        make_word((1,), (1,), "BB", A)
    with pytest.raises(LetterOutOfRange):
        make_word((), (3,), "B", A)


def test_bottom_word():
    A = validate_cartan([[2, -1], [-1, 2]])
    w = bottom_word((1, 2, 1), A)
    assert [(l.value, l.origin) for l in w] == [(1, BOTTOM), (2, BOTTOM), (1, BOTTOM)]
    assert len(bottom_word((), A)) == 0
    assert len(bottom_word((1, 2, 1, 3, 1, 3, 2), A_PRIME)) == 7
    single = make_word((), (1,), "B", A)
    assert single[0].origin is BOTTOM


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_random_cartan_is_symmetrizable(seed):
    rng = random.Random(seed)
    A = random_cartan(rng, rng.randint(1, 4))
    n = A.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert A.s(i) * A.a(i, j) == A.s(j) * A.a(j, i)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from("TB")), max_size=12))
def test_decompose_roundtrip(letters):
    A = validate_cartan([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    origins = "".join(o for _, o in letters)
    top = [v for v, o in letters if o == "T"]
    bottom = [v for v, o in letters if o == "B"]
    w = make_word(top, bottom, origins, A)
    assert make_word(w.top, w.bottom, w.origins, A) == w
    assert all((l.origin is TOP) == (o == "T") for l, (_, o) in zip(w, letters))
