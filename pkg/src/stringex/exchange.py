"""Exchange matrices of string diagrams, and their quiver views.

The matrix is ``B = sum over nodes m of B^(m)``.  Individual node
contributions have half-integer entries, so they are accumulated doubled
and halved once at the end.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .core import CartanMatrix, ShuffleWord
from .diagram import ClosedStringId, Node, StringDiagram, build_diagram, crosses
from .errors import (
    EntryOutOfRange,
    IntegralityViolation,
    NotSkewSymmetric,
    SymmetrizerCheckFailed,
    UnknownVertex,
)

Label = ClosedStringId


@dataclass(frozen=True)
class ExchangeMatrix:
    """Integer matrix whose rows and columns are indexed by ``labels``.

    ``labels`` is usually the closed-string set in its natural order, but any
    ordering is allowed; the level of a vertex is read off its label.
    """

    labels: tuple[Label, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        if len(self.rows) != len(self.labels) or any(len(r) != len(self.labels) for r in self.rows):
            raise ValueError("matrix shape does not match labels")

    @classmethod
    def from_rows(cls, labels: Iterable[Label | str], rows: Iterable[Iterable[int]]) -> ExchangeMatrix:
        labs = tuple(l if isinstance(l, ClosedStringId) else ClosedStringId.parse(l) for l in labels)
        return cls(labs, tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def zero(cls, labels: Iterable[Label]) -> ExchangeMatrix:
        labs = tuple(labels)
        return cls(labs, tuple((0,) * len(labs) for _ in labs))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def level_of(self) -> dict[Label, int]:
        return {x: x.level for x in self.labels}

    def index(self, x: Label) -> int:
        try:
            return self.labels.index(x)
        except ValueError:
            raise UnknownVertex(f"no vertex {x}") from None

    def __getitem__(self, key: tuple[Label, Label]) -> int:
        x, z = key
        return self.rows[self.index(x)][self.index(z)]

    def column(self, v: Label) -> dict[Label, int]:
        """Off-diagonal entries ``b_xv`` of column ``v``."""
        c = self.index(v)
        return {x: self.rows[i][c] for i, x in enumerate(self.labels) if i != c}

    def as_dict(self) -> dict[tuple[Label, Label], int]:
        return {
            (x, z): self.rows[i][j]
            for i, x in enumerate(self.labels)
            for j, z in enumerate(self.labels)
        }

    def reordered(self, order: Sequence[Label]) -> ExchangeMatrix:
        """The same matrix with rows and columns permuted into ``order``."""
        if sorted(order) != sorted(self.labels) or len(order) != len(self.labels):
            raise UnknownVertex("reordering must be a permutation of the labels")
        idx = [self.index(x) for x in order]
        return ExchangeMatrix(tuple(order), tuple(tuple(self.rows[i][j] for j in idx) for i in idx))

    def sorted(self) -> ExchangeMatrix:
        return self.reordered(sorted(self.labels))

    def relabeled(self, mapping: Mapping[Label, Label]) -> ExchangeMatrix:
        """Rename vertices; labels missing from ``mapping`` are kept."""
        return ExchangeMatrix(tuple(mapping.get(x, x) for x in self.labels), self.rows)

    def without(self, v: Label) -> ExchangeMatrix:
        """Delete row and column ``v``."""
        c = self.index(v)
        keep = [i for i in range(len(self.labels)) if i != c]
        return ExchangeMatrix(
            tuple(self.labels[i] for i in keep),
            tuple(tuple(self.rows[i][j] for j in keep) for i in keep),
        )

    def same_as(self, other: ExchangeMatrix) -> bool:
        """Entrywise equality up to the order of labels."""
        if set(self.labels) != set(other.labels):
            return False
        return self.sorted() == other.sorted()

    def is_skew_symmetric(self) -> bool:
        n = len(self.labels)
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(n))

    def to_json(self) -> dict:
        return {"labels": [str(x) for x in self.labels], "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping) -> ExchangeMatrix:
        return cls.from_rows(data["labels"], data["rows"])

    def __str__(self) -> str:
        width = max([len(str(v)) for r in self.rows for v in r] + [len(str(x)) for x in self.labels] + [1])
        head = " " * (width + 1) + " ".join(str(x).rjust(width) for x in self.labels)
        body = [
            str(x).rjust(width) + " " + " ".join(str(v).rjust(width) for v in r)
            for x, r in zip(self.labels, self.rows)
        ]
        return "\n".join([head, *body])


def node_contribution(
    diagram: StringDiagram, cartan: CartanMatrix, m: Node
) -> dict[tuple[Label, Label], int]:
    """Doubled entries ``2 * B^(m)`` of one node, as a sparse dict."""
    out: dict[tuple[Label, Label], int] = defaultdict(int)
    k, eps = m.level, m.epsilon
    x, y = diagram.strings_of(m)
    if x is not None and y is not None:
        out[x, y] += 2 * eps
        out[y, x] -= 2 * eps
    if x is not None or y is not None:
        for cs in diagram.closed_strings:
            z = cs.id
            j = z.level
            if j == k or not crosses(diagram, z, m.triangle_pos):
                continue
            if x is not None:
                out[x, z] += cartan.a(k, j) * eps
                out[z, x] -= cartan.a(j, k) * eps
            if y is not None:
                out[y, z] -= cartan.a(k, j) * eps
                out[z, y] += cartan.a(j, k) * eps
    return {key: v for key, v in out.items() if v}


def exchange_matrix(word: ShuffleWord, diagram: StringDiagram | None = None) -> ExchangeMatrix:
    diagram = diagram or build_diagram(word)
    labels = diagram.I
    pos = {x: i for i, x in enumerate(labels)}
    doubled = [[0] * len(labels) for _ in labels]
    for m in diagram.nodes:
        for (x, z), v in node_contribution(diagram, word.cartan, m).items():
            doubled[pos[x]][pos[z]] += v
    rows = []
    for i, r in enumerate(doubled):
        for j, v in enumerate(r):
            if v % 2:
                raise IntegralityViolation(f"doubled entry ({labels[i]}, {labels[j]}) = {v} is odd")
        rows.append(tuple(v // 2 for v in r))
    return ExchangeMatrix(labels, tuple(rows))


def skew_symmetrizer(matrix: ExchangeMatrix, cartan: CartanMatrix) -> tuple[int, ...]:
    """Diagonal ``s'_x = s_level(x)``; checks that ``Diag(s') B`` is skew-symmetric."""
    diag = tuple(cartan.s(x.level) for x in matrix.labels)
    if not is_skew_symmetrized_by(matrix, diag):
        raise SymmetrizerCheckFailed("Diag(s') B is not skew-symmetric")
    return diag


def is_skew_symmetrized_by(matrix: ExchangeMatrix, diag: Sequence[int]) -> bool:
    b = matrix.rows
    n = len(b)
    return all(diag[i] * b[i][j] == -diag[j] * b[j][i] for i in range(n) for j in range(i, n))


# -- coloured quiver ----------------------------------------------------------


@dataclass(frozen=True)
class ColouredQuiver:
    vertices: tuple[Label, ...]
    horizontal_arrows: frozenset[tuple[Label, Label]]
    inclined_arrows: frozenset[tuple[Label, Label]]


def coloured_quiver(matrix: ExchangeMatrix, cartan: CartanMatrix) -> ColouredQuiver:
    horizontal, inclined = set(), set()
    for (x, z), b in matrix.as_dict().items():
        k, j = x.level, z.level
        if k == j:
            if b == -1:
                horizontal.add((x, z))
            elif b not in (0, 1):
                raise EntryOutOfRange(f"same-level entry ({x}, {z}) = {b}")
        else:
            a = cartan.a(k, j)
            if b == a and a < 0:
                inclined.add((x, z))
            elif b not in (0, -a):
                raise EntryOutOfRange(f"entry ({x}, {z}) = {b} not in {{0, +-{abs(a)}}}")
    return ColouredQuiver(matrix.labels, frozenset(horizontal), frozenset(inclined))


def from_coloured_quiver(quiver: ColouredQuiver, cartan: CartanMatrix) -> ExchangeMatrix:
    """Rebuild the exchange matrix: the quiver, levels and ``A`` determine it."""
    labels = quiver.vertices
    rows = []
    for x in labels:
        row = []
        for z in labels:
            if (x, z) in quiver.horizontal_arrows:
                row.append(-1)
            elif (z, x) in quiver.horizontal_arrows:
                row.append(1)
            elif (x, z) in quiver.inclined_arrows:
                row.append(cartan.a(x.level, z.level))
            elif (z, x) in quiver.inclined_arrows:
                row.append(-cartan.a(x.level, z.level))
            else:
                row.append(0)
        rows.append(tuple(row))
    return ExchangeMatrix(labels, tuple(rows))


# -- usual quiver -------------------------------------------------------------


@dataclass(frozen=True)
class UsualQuiver:
    """Multi-quiver with ``arrows[(source, target)] = multiplicity > 0``."""

    vertices: tuple[Hashable, ...]
    arrows: Mapping[tuple[Hashable, Hashable], int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UsualQuiver):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and dict(self.arrows) == dict(other.arrows)

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), frozenset(self.arrows.items())))

    def is_source(self, v: Hashable) -> bool:
        return not any(t == v for (_, t) in self.arrows)

    def is_sink(self, v: Hashable) -> bool:
        return not any(s == v for (s, _) in self.arrows)


def usual_quiver(matrix: ExchangeMatrix) -> UsualQuiver:
    """``b_ij > 0`` means ``b_ij`` arrows from ``j`` to ``i``."""
    if not matrix.is_skew_symmetric():
        raise NotSkewSymmetric("usual quiver is only defined for skew-symmetric matrices")
    arrows = {(z, x): b for (x, z), b in matrix.as_dict().items() if b > 0}
    return UsualQuiver(matrix.labels, arrows)


def matrix_of_quiver(quiver: UsualQuiver, order: Sequence[Hashable] | None = None) -> list[list[int]]:
    """``b_ij = |j -> i| - |i -> j|`` as a plain list of rows."""
    order = list(order if order is not None else quiver.vertices)
    return [
        [quiver.arrows.get((j, i), 0) - quiver.arrows.get((i, j), 0) for j in order]
        for i in order
    ]


# -- DOT ----------------------------------------------------------------------


def _dot_id(v: Hashable) -> str:
    return '"' + str(v).replace('"', r"\"") + '"'


def usual_quiver_dot(quiver: UsualQuiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {_dot_id(v)};" for v in quiver.vertices]
    pos = {v: i for i, v in enumerate(quiver.vertices)}
    for (s, t), mult in sorted(quiver.arrows.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]])):
        lines.append(f"  {_dot_id(s)} -> {_dot_id(t)} [label={mult}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coloured_quiver_dot(quiver: ColouredQuiver, cartan: CartanMatrix, name: str = "Q") -> str:
    """Horizontal arrows solid; inclined arrows dashed, labelled ``|a_kj|``."""
    lines = [f"digraph {name} {{"]
    lines += [f"  {_dot_id(v)};" for v in quiver.vertices]
    pos = {v: i for i, v in enumerate(quiver.vertices)}
    key = lambda e: (pos[e[0]], pos[e[1]])  # noqa: E731
    for s, t in sorted(quiver.horizontal_arrows, key=key):
        lines.append(f"  {_dot_id(s)} -> {_dot_id(t)};")
    for s, t in sorted(quiver.inclined_arrows, key=key):
        mult = -cartan.a(s.level, t.level)
        lines.append(f"  {_dot_id(s)} -> {_dot_id(t)} [style=dashed, label={mult}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
