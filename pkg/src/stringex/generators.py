"""Seeded random instances for property tests and ``oracle check``."""

from __future__ import annotations

import math
import random

from .core import CartanMatrix, ShuffleWord, bottom_word, make_word, validate_cartan
from .diagram import ClosedStringId
from .exchange import ExchangeMatrix


def random_cartan(rng: random.Random, n: int, *, max_s: int = 3, max_c: int = 3, symmetric: bool = False) -> CartanMatrix:
    """A symmetrizable GCM built from a random symmetrizer.

    For each pair ``i < j`` pick ``c >= 0`` and set ``a_ij = -c s_j / g``,
    ``a_ji = -c s_i / g`` with ``g = gcd(s_i, s_j)``; then ``s_i a_ij`` is
    symmetric by construction.
    """
    s = [1 if symmetric else rng.randint(1, max_s) for _ in range(n)]
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.randint(0, max_c)
            g = math.gcd(s[i], s[j])
            rows[i][j] = -c * s[j] // g
            rows[j][i] = -c * s[i] // g
    return validate_cartan(rows)


def random_word(rng: random.Random, cartan: CartanMatrix, length: int, *, all_bottom: bool = False) -> ShuffleWord:
    values = [rng.randint(1, cartan.n) for _ in range(length)]
    if all_bottom:
        return bottom_word(values, cartan)
    origins = "".join(rng.choice("TB") for _ in range(length))
    top = [v for v, o in zip(values, origins) if o == "T"]
    bottom = [v for v, o in zip(values, origins) if o == "B"]
    return make_word(top, bottom, origins, cartan)


def random_instance(
    rng: random.Random, *, max_n: int = 4, max_len: int = 12, all_bottom: bool = False, symmetric: bool = False
) -> ShuffleWord:
    n = rng.randint(1, max_n)
    cartan = random_cartan(rng, n, symmetric=symmetric)
    return random_word(rng, cartan, rng.randint(1, max_len), all_bottom=all_bottom)


def random_skew_symmetrizable(
    rng: random.Random, size: int, *, max_entry: int = 3, symmetrizer: list[int] | None = None
) -> tuple[ExchangeMatrix, tuple[int, ...]]:
    """A random ``size x size`` matrix ``B`` with ``D B`` skew-symmetric.

    Labels are ``1:1 ... 1:size``.  Returns the matrix and ``D``'s diagonal.
    """
    d = symmetrizer or [rng.randint(1, 3) for _ in range(size)]
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            c = rng.randint(-max_entry, max_entry)
            g = math.gcd(d[i], d[j])
            # d_i b_ij = -d_j b_ji
            rows[i][j] = c * d[j] // g
            rows[j][i] = -c * d[i] // g
    labels = tuple(ClosedStringId(1, r) for r in range(1, size + 1))
    return ExchangeMatrix(labels, tuple(tuple(r) for r in rows)), tuple(d)


def random_skew_symmetric(rng: random.Random, size: int, *, max_entry: int = 3) -> ExchangeMatrix:
    return random_skew_symmetrizable(rng, size, max_entry=max_entry, symmetrizer=[1] * size)[0]
