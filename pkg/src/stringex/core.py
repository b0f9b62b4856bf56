"""Cartan matrices and shuffle words.

A shuffle word interleaves a top sequence ``i`` and a bottom sequence ``j``;
it encodes both the trapezoid and one of its triangulations.  Letter ``t``
of the word is the ``t``-th triangle from the left.  Letters are 1-based
throughout, as are serialized forms.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    LengthMismatch,
    LetterOutOfRange,
    NotGeneralizedCartan,
    NotSymmetrizable,
)


class Origin(enum.Enum):
    TOP = "T"
    BOTTOM = "B"

    @property
    def sign(self) -> int:
        """Node sign: +1 for a bottom-labelled triangle, -1 for a top one."""
        return 1 if self is Origin.BOTTOM else -1

    def toggled(self) -> Origin:
        return Origin.BOTTOM if self is Origin.TOP else Origin.TOP

    @classmethod
    def parse(cls, ch: str) -> Origin:
        try:
            return cls(ch.upper())
        except ValueError:
            raise ValueError(f"origin flag must be 'T' or 'B', got {ch!r}") from None


TOP = Origin.TOP
BOTTOM = Origin.BOTTOM


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int) -> int:
        """Entry a_ij with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def s(self, i: int) -> int:
        return self.symmetrizer[i - 1]

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(n))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def validate_cartan(entries: Sequence[Sequence[int]]) -> CartanMatrix:
    """Check the generalized-Cartan axioms and compute the minimal symmetrizer.

    The symmetrizer is found by propagating ``s_j = s_i * a_ij / a_ji`` along
    the support graph of the off-diagonal entries, then clearing
    denominators and dividing out the gcd on each connected component.
    """
    rows = [list(r) for r in entries]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotGeneralizedCartan("matrix must be square with n >= 1")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or not isinstance(v, int):
                raise NotGeneralizedCartan(f"entries must be integers, got {v!r}")
    for i in range(n):
        if rows[i][i] != 2:
            raise NotGeneralizedCartan(f"a_{i + 1}{i + 1} = {rows[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise NotGeneralizedCartan(f"a_{i + 1}{j + 1} = {rows[i][j]} is positive")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotGeneralizedCartan(
                    f"a_{i + 1}{j + 1} = {rows[i][j]} but a_{j + 1}{i + 1} = {rows[j][i]}"
                )

    ratio: list[Fraction | None] = [None] * n
    sym = [0] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        component = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or rows[i][j] == 0:
                    continue
                want = ratio[i] * Fraction(rows[i][j], rows[j][i])
                if ratio[j] is None:
                    ratio[j] = want
                    component.append(j)
                    queue.append(j)
                elif ratio[j] != want:
                    raise NotSymmetrizable(
                        f"ratio constraints inconsistent at a_{i + 1}{j + 1}/a_{j + 1}{i + 1}"
                    )
        denom = lcm(*(ratio[c].denominator for c in component))
        ints = [int(ratio[c] * denom) for c in component]
        g = gcd(*ints)
        for c, v in zip(component, ints):
            sym[c] = v // g

    return CartanMatrix(tuple(tuple(r) for r in rows), tuple(sym))


class Letter(NamedTuple):
    value: int
    origin: Origin


@dataclass(frozen=True)
class ShuffleWord:
    letters: tuple[Letter, ...]
    cartan: CartanMatrix

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, pos: int) -> Letter:
        return self.letters[pos]

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(l.value for l in self.letters if l.origin is TOP)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(l.value for l in self.letters if l.origin is BOTTOM)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(l.value for l in self.letters)

    @property
    def origins(self) -> str:
        return "".join(l.origin.value for l in self.letters)

    def is_all_bottom(self) -> bool:
        return all(l.origin is BOTTOM for l in self.letters)

    def replace(self, letters: Iterable[Letter]) -> ShuffleWord:
        return ShuffleWord(tuple(letters), self.cartan)

    def __str__(self) -> str:
        return " ".join(f"{l.value}{l.origin.value}" for l in self.letters)

    def to_json(self) -> dict:
        return {
            "cartan": self.cartan.to_json(),
            "top": list(self.top),
            "bottom": list(self.bottom),
            "origins": self.origins,
        }


def _check_letters(seq: Sequence[int], n: int, name: str) -> None:
    for k in seq:
        if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
            raise LetterOutOfRange(f"{name} letter {k!r} outside [1, {n}]")


def make_word(
    top: Sequence[int],
    bottom: Sequence[int],
    origins: Sequence[Origin] | str,
    cartan: CartanMatrix,
) -> ShuffleWord:
    """Interleave ``top`` and ``bottom`` according to ``origins``.

    ``origins`` may be a string of ``'T'``/``'B'`` characters.
    """
    if isinstance(origins, str):
        origins = [Origin.parse(c) for c in origins]
    _check_letters(top, cartan.n, "top")
    _check_letters(bottom, cartan.n, "bottom")
    n_top = sum(1 for o in origins if o is TOP)
    n_bottom = len(origins) - n_top
    if n_top != len(top) or n_bottom != len(bottom):
        raise LengthMismatch(
            f"origins has {n_top} T / {n_bottom} B flags for "
            f"l(i) = {len(top)}, l(j) = {len(bottom)}"
        )
    it_top, it_bottom = iter(top), iter(bottom)
    letters = tuple(
        Letter(next(it_top) if o is TOP else next(it_bottom), o) for o in origins
    )
    return ShuffleWord(letters, cartan)


def bottom_word(bottom: Sequence[int], cartan: CartanMatrix) -> ShuffleWord:
    """The unique triangulation of the trapezoid with empty top sequence."""
    return make_word((), bottom, [BOTTOM] * len(bottom), cartan)


def inverse_concat(top: Sequence[int], bottom: Sequence[int]) -> tuple[int, ...]:
    """``i^{-1} o j``: the reversed top sequence followed by the bottom one."""
    return tuple(reversed(top)) + tuple(bottom)
