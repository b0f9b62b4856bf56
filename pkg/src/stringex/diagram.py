"""String diagrams of shuffle words.

One node per triangle, placed on the level of the triangle's letter.  Nodes
cut each level into strings; a string with a node at each end is *closed*
and becomes a vertex of the exchange matrix.

Closed string ``(k, r)`` is the gap between the ``r``-th and ``(r+1)``-th
node on level ``k``.  Open strings are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering

from .core import Origin, ShuffleWord
from .errors import UnknownString


@total_ordering
@dataclass(frozen=True)
class ClosedStringId:
    level: int
    index: int

    def __str__(self) -> str:
        return f"{self.level}:{self.index}"

    def __repr__(self) -> str:
        return f"ClosedStringId({self.level}:{self.index})"

    def __lt__(self, other: ClosedStringId) -> bool:
        if not isinstance(other, ClosedStringId):
            return NotImplemented
        return (self.level, self.index) < (other.level, other.index)

    @classmethod
    def parse(cls, text: str) -> ClosedStringId:
        """Parse ``"k:i"``."""
        try:
            level, index = text.strip().split(":")
            cid = cls(int(level), int(index))
        except ValueError:
            raise ValueError(f"bad closed-string label {text!r}, expected 'level:index'") from None
        if cid.level < 1 or cid.index < 1:
            raise ValueError(f"bad closed-string label {text!r}")
        return cid


def label(text: str) -> ClosedStringId:
    """Shorthand for :meth:`ClosedStringId.parse`."""
    return ClosedStringId.parse(text)


@dataclass(frozen=True)
class Node:
    triangle_pos: int
    level: int
    epsilon: int


@dataclass(frozen=True)
class ClosedString:
    id: ClosedStringId
    left_pos: int
    right_pos: int


@dataclass(frozen=True)
class StringDiagram:
    word: ShuffleWord
    nodes_by_level: dict[int, tuple[Node, ...]]
    closed_strings: tuple[ClosedString, ...]
    _by_id: dict[ClosedStringId, ClosedString] = field(repr=False, compare=False)

    @property
    def I(self) -> tuple[ClosedStringId, ...]:
        return tuple(cs.id for cs in self.closed_strings)

    @property
    def nodes(self) -> tuple[Node, ...]:
        """All nodes in triangle order."""
        return tuple(
            sorted((m for ms in self.nodes_by_level.values() for m in ms), key=lambda m: m.triangle_pos)
        )

    def string(self, z: ClosedStringId) -> ClosedString:
        try:
            return self._by_id[z]
        except KeyError:
            raise UnknownString(f"no closed string {z} in diagram") from None

    def closed_count(self, level: int) -> int:
        return max(len(self.nodes_by_level.get(level, ())) - 1, 0)

    def rank(self, node: Node) -> int:
        """1-based left-to-right rank of ``node`` on its level."""
        return self.nodes_by_level[node.level].index(node) + 1

    def strings_of(self, node: Node) -> tuple[ClosedStringId | None, ClosedStringId | None]:
        """The (left, right) strings at ``node``; ``None`` where the string is open."""
        r = self.rank(node)
        count = len(self.nodes_by_level[node.level])
        left = ClosedStringId(node.level, r - 1) if r > 1 else None
        right = ClosedStringId(node.level, r) if r < count else None
        return left, right


def build_diagram(word: ShuffleWord) -> StringDiagram:
    n = word.cartan.n
    by_level: dict[int, list[Node]] = {k: [] for k in range(1, n + 1)}
    for t, letter in enumerate(word.letters, start=1):
        by_level[letter.value].append(Node(t, letter.value, letter.origin.sign))
    closed = []
    for k in range(1, n + 1):
        ms = by_level[k]
        for r in range(1, len(ms)):
            closed.append(ClosedString(ClosedStringId(k, r), ms[r - 1].triangle_pos, ms[r].triangle_pos))
    return StringDiagram(
        word=word,
        nodes_by_level={k: tuple(v) for k, v in by_level.items()},
        closed_strings=tuple(closed),
        _by_id={cs.id: cs for cs in closed},
    )


def crosses(diagram: StringDiagram, z: ClosedStringId, t: int) -> bool:
    """Whether closed string ``z`` passes through triangle ``t``.

    A string meets a triangle transversely exactly when the triangle lies
    strictly between the string's two endpoint triangles.
    """
    cs = diagram.string(z)
    return cs.left_pos < t < cs.right_pos


_CELL = 6


def render_ascii(diagram: StringDiagram) -> str:
    """Render a diagram as text, one row per level.

    Each triangle gets a column of width 6.  The header row shows the
    triangle index and origin (``3B`` = third triangle, bottom-labelled).
    On a level row, nodes print as ``(+k)`` or ``(-k)``, closed strings as
    ``=`` and open strings as ``-``.
    """
    word = diagram.word
    length = len(word)
    lines = ["    " + "".join(f"{t}{l.origin.value}".center(_CELL) for t, l in enumerate(word, 1))]
    for k in sorted(diagram.nodes_by_level):
        positions = [m.triangle_pos for m in diagram.nodes_by_level[k]]
        cells = []
        for t in range(1, length + 1):
            before = sum(1 for p in positions if p < t)
            after = sum(1 for p in positions if p > t)
            left_fill = "=" if before and (after or t in positions) else "-"
            if t in positions:
                right_fill = "=" if after else "-"
                sign = "+" if word[t - 1].origin is Origin.BOTTOM else "-"
                cells.append(left_fill + f"({sign}{k})".center(_CELL - 2) + right_fill)
            else:
                cells.append(left_fill * _CELL)
        lines.append(f"{k:>2} |" + "".join(cells) + "|")
    return "\n".join(lines) + "\n"
