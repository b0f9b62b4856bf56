"""Brute-force reimplementation of exchange-matrix entries, for cross-checks.

Nothing here calls into :mod:`stringex.exchange` or the diagram builder:
endpoint positions are recomputed straight from the word's letters, and each
entry is evaluated on its own from the (at most four) nodes that can
contribute to it.
"""

from __future__ import annotations

from fractions import Fraction

from .core import CartanMatrix, Origin, ShuffleWord
from .diagram import ClosedStringId, StringDiagram
from .errors import SameLevel, UnknownString
from .exchange import ExchangeMatrix


def _positions(word: ShuffleWord, level: int) -> list[int]:
    return [t for t, (value, _) in enumerate(word.letters, 1) if value == level]


def _endpoints(word: ShuffleWord, x: ClosedStringId) -> tuple[int, int]:
    ps = _positions(word, x.level)
    if not 1 <= x.index < len(ps):
        raise UnknownString(f"no closed string {x}")
    return ps[x.index - 1], ps[x.index]


def _eps(word: ShuffleWord, t: int) -> int:
    return 1 if word.letters[t - 1].origin is Origin.BOTTOM else -1


def _passes(span: tuple[int, int], t: int) -> bool:
    lo, hi = span
    return lo < t < hi


def entry_by_four_terms(
    source: ShuffleWord | StringDiagram, cartan: CartanMatrix, x: ClosedStringId, z: ClosedStringId
) -> int:
    """``b_xz`` for strings on different levels, summed over four endpoint nodes.

    ``source`` may be a word or a diagram; only its word is consulted.
    """
    word = getattr(source, "word", source)
    k, j = x.level, z.level
    if k == j:
        raise SameLevel(f"{x} and {z} lie on the same level; use same_level_entry")
    a = Fraction(cartan.a(k, j), 2)
    xs, zs = _endpoints(word, x), _endpoints(word, z)
    total = Fraction(0)
    m1, m2 = xs
    # x leaves m1 to the right and enters m2 from the left
    if _passes(zs, m1):
        total -= a * _eps(word, m1)
    if _passes(zs, m2):
        total += a * _eps(word, m2)
    n1, n2 = zs
    if _passes(xs, n1):
        total += a * _eps(word, n1)
    if _passes(xs, n2):
        total -= a * _eps(word, n2)
    if total.denominator != 1:
        raise ValueError(f"entry ({x}, {z}) = {total} is not an integer")
    return int(total)


def same_level_entry(word: ShuffleWord, x: ClosedStringId, z: ClosedStringId) -> int:
    """Strings on one level interact only through a shared endpoint node."""
    if x.level != z.level:
        raise ValueError("strings on different levels")
    xs, zs = _endpoints(word, x), _endpoints(word, z)
    if xs[1] == zs[0]:
        return _eps(word, xs[1])
    if zs[1] == xs[0]:
        return -_eps(word, xs[0])
    return 0


def all_labels(word: ShuffleWord) -> list[ClosedStringId]:
    out = []
    for k in range(1, word.cartan.n + 1):
        count = len(_positions(word, k))
        out.extend(ClosedStringId(k, r) for r in range(1, count))
    return out


def oracle_matrix(word: ShuffleWord) -> ExchangeMatrix:
    labels = all_labels(word)
    rows = []
    for x in labels:
        row = []
        for z in labels:
            if x.level == z.level:
                row.append(same_level_entry(word, x, z))
            else:
                row.append(entry_by_four_terms(word, word.cartan, x, z))
        rows.append(tuple(row))
    return ExchangeMatrix(tuple(labels), tuple(rows))


def check_entry_ranges(matrix: ExchangeMatrix, cartan: CartanMatrix) -> bool:
    """Entries of a freshly built matrix lie in ``{0, +-1}`` or ``{0, +-a_kj}``."""
    for x, row in zip(matrix.labels, matrix.rows):
        for z, b in zip(matrix.labels, row):
            allowed = {0, 1, -1} if x.level == z.level else {0, cartan.a(x.level, z.level), -cartan.a(x.level, z.level)}
            if b not in allowed:
                return False
    return True


def disagreements(word: ShuffleWord, matrix: ExchangeMatrix) -> list[tuple[ClosedStringId, ClosedStringId, int, int]]:
    """Entries where ``matrix`` differs from the oracle: ``(x, z, got, expected)``."""
    expected = oracle_matrix(word)
    if set(expected.labels) != set(matrix.labels):
        raise ValueError("label sets differ")
    got = matrix.as_dict()
    return [
        (x, z, got[x, z], e)
        for (x, z), e in sorted(expected.as_dict().items())
        if got[x, z] != e
    ]
