"""Diagonal flips and end reductions on shuffle words.

A flip swaps two adjacent letters of opposite origin (the two triangles of a
quadrilateral with one top and one bottom edge).  If the two values differ
the exchange matrix is unchanged; if they are equal it is mutated at the
closed string joining the two nodes.

Vertex identity across moves: closed string ``(k, r)`` is the ``r``-th gap
between consecutive nodes on level ``k``.  A flip only ever exchanges two
nodes that are adjacent in triangle order, so it never changes how many
nodes of a level lie left of any gap, and an end reduction only changes a
node's sign.  Gap ranks are therefore stable under every move here, and the
label correspondence carried by :func:`reduce_to_bottom` is the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import BOTTOM, TOP, Letter, ShuffleWord
from .diagram import ClosedStringId
from .errors import (
    NotAQuadrilateral,
    NotSameShuffleClass,
    PositionOutOfRange,
    ReductionNotApplicable,
)
from .exchange import exchange_matrix


@dataclass(frozen=True)
class FlipEffect:
    """``vertex is None`` means the exchange matrix is unchanged."""

    vertex: ClosedStringId | None = None

    @property
    def is_identity(self) -> bool:
        return self.vertex is None

    def __str__(self) -> str:
        return "id" if self.vertex is None else f"mu({self.vertex})"

    def to_json(self) -> str | None:
        return None if self.vertex is None else str(self.vertex)


IDENTITY = FlipEffect()


class ReductionKind(enum.Enum):
    L_d = "Ld"
    L_u = "Lu"
    R_d = "Rd"
    R_u = "Ru"

    @classmethod
    def parse(cls, text: str) -> ReductionKind:
        norm = text.replace("_", "")
        for kind in cls:
            if kind.value.lower() == norm.lower():
                return kind
        raise ValueError(f"unknown reduction {text!r}; expected one of Ld, Lu, Rd, Ru")


def flip(word: ShuffleWord, pos: int) -> tuple[ShuffleWord, FlipEffect]:
    """Flip the diagonal between triangles ``pos`` and ``pos + 1`` (1-based)."""
    if not 1 <= pos < len(word):
        raise PositionOutOfRange(f"flip position {pos} outside [1, {len(word) - 1}]")
    a, b = word[pos - 1], word[pos]
    if a.origin is b.origin:
        raise NotAQuadrilateral(
            f"triangles {pos} and {pos + 1} are both {a.origin.name.lower()}-labelled"
        )
    letters = list(word.letters)
    letters[pos - 1], letters[pos] = b, a
    if a.value != b.value:
        return word.replace(letters), IDENTITY
    rank = sum(1 for l in word.letters[:pos] if l.value == a.value)
    return word.replace(letters), FlipEffect(ClosedStringId(a.value, rank))


def effects_to_seq(effects: list[FlipEffect]) -> list[ClosedStringId]:
    """Mutation sequence (composition order) realized by performing ``effects`` in order."""
    return [e.vertex for e in reversed(effects) if e.vertex is not None]


def flip_path(source: ShuffleWord, target: ShuffleWord) -> list[tuple[int, FlipEffect]]:
    """A shortest flip sequence turning ``source`` into ``target``.

    Works left to right: at the first position whose origin disagrees with
    ``target``, the next letter of the wanted origin is bubbled left.
    Composing the effects (see :func:`effects_to_seq`) gives a sequence
    ``s`` with ``apply_seq(B(source), s) == B(target)``.
    """
    if (
        source.top != target.top
        or source.bottom != target.bottom
        or source.cartan != target.cartan
    ):
        raise NotSameShuffleClass("words are not shuffles of the same (i, j) over the same Cartan matrix")
    path = []
    word = source
    want = target.origins
    for p in range(len(word)):
        if word[p].origin.value == want[p]:
            continue
        q = next(q for q in range(p + 1, len(word)) if word[q].origin.value == want[p])
        for pos in range(q, p, -1):
            word, effect = flip(word, pos)
            path.append((pos, effect))
    assert word == target
    return path


def reduce(word: ShuffleWord, kind: ReductionKind) -> ShuffleWord:
    """Toggle the origin of the first (``L_*``) or last (``R_*``) letter.

    ``L_d``/``R_d`` need a bottom letter there and move it to the top
    sequence; ``L_u``/``R_u`` need a top letter and move it to the bottom.
    """
    if not word.letters:
        raise ReductionNotApplicable("empty word")
    pos = 0 if kind in (ReductionKind.L_d, ReductionKind.L_u) else len(word) - 1
    need = BOTTOM if kind in (ReductionKind.L_d, ReductionKind.R_d) else TOP
    letter = word[pos]
    if letter.origin is not need:
        raise ReductionNotApplicable(
            f"{kind.value} needs a {need.name.lower()} letter at position {pos + 1}"
        )
    letters = list(word.letters)
    letters[pos] = Letter(letter.value, letter.origin.toggled())
    return word.replace(letters)


@dataclass(frozen=True)
class BottomReduction:
    bottom: ShuffleWord
    mutations: list[ClosedStringId]
    label_map: dict[ClosedStringId, ClosedStringId]
    moves: list[tuple[str, int, FlipEffect]]

    def to_json(self) -> dict:
        return {
            "bottom_word": self.bottom.to_json(),
            "mutations": [str(v) for v in self.mutations],
            "label_map": {str(k): str(v) for k, v in sorted(self.label_map.items())},
        }


def reduce_to_bottom(word: ShuffleWord) -> BottomReduction:
    """Reduce ``(i, j)`` to ``(empty, i^{-1} o j)``.

    Repeatedly bubble the leftmost top letter to the front by flips, then
    move it to the bottom sequence with ``L_u``.  The returned ``mutations``
    satisfy ``apply_seq(B(bottom), mutations)`` relabeled through
    ``label_map`` equals ``B(word)``.
    """
    moves: list[tuple[str, int, FlipEffect]] = []
    effects: list[FlipEffect] = []
    current = word
    while True:
        first_top = next((p for p, l in enumerate(current, 1) if l.origin is TOP), None)
        if first_top is None:
            break
        for pos in range(first_top - 1, 0, -1):
            current, effect = flip(current, pos)
            effects.append(effect)
            moves.append(("flip", pos, effect))
        current = reduce(current, ReductionKind.L_u)
        moves.append(("Lu", 1, IDENTITY))
    labels = exchange_matrix(current).labels
    return BottomReduction(
        bottom=current,
        # bottom -> word undoes the flips: first flip performed is applied last
        mutations=[e.vertex for e in effects if e.vertex is not None],
        label_map={x: x for x in labels},
        moves=moves,
    )
