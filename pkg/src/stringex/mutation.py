"""Matrix and quiver mutation, mutation sequences, reddening search.

Mutation sequences use function-composition order: the list
``[a, b, c]`` stands for ``mu_a o mu_b o mu_c``, so ``c`` is applied first.
The inverse of a sequence is the reversed list.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import DepthExceeded, InternalLemmaViolation, SearchTooLarge, UnknownVertex
from .exchange import ExchangeMatrix, Label, UsualQuiver

Rows = tuple[tuple[int, ...], ...]


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def mutate_rows(rows: Rows, k: int, mutable: int | None = None) -> Rows:
    """Mutate an integer matrix at column/row index ``k``.

    ``rows`` may have extra (frozen) rows below the first ``mutable`` ones;
    they are mutated by the same rule, which is how a C-matrix rides along.
    """
    ncols = len(rows[0]) if rows else 0
    bk = rows[k]
    out = []
    for i, r in enumerate(rows):
        bik = r[k]
        if bik == 0:
            out.append(r)
            continue
        s = _sgn(bik)
        new = list(r)
        for j in range(ncols):
            if j == k:
                new[j] = -bik
            else:
                prod = bik * bk[j]
                if prod > 0:
                    new[j] = r[j] + s * prod
        out.append(tuple(new))
    out[k] = tuple(-v for v in bk)
    return tuple(out)


def mutate(matrix: ExchangeMatrix, k: Label) -> ExchangeMatrix:
    return ExchangeMatrix(matrix.labels, mutate_rows(matrix.rows, matrix.index(k)))


def apply_seq(matrix: ExchangeMatrix, seq: Sequence[Label]) -> ExchangeMatrix:
    """Apply ``seq`` in composition order (rightmost direction first)."""
    rows = matrix.rows
    for k in reversed(seq):
        rows = mutate_rows(rows, matrix.index(k))
    return ExchangeMatrix(matrix.labels, rows)


def apply_in_order(matrix: ExchangeMatrix, directions: Iterable[Label]) -> ExchangeMatrix:
    """Apply directions left to right (the first listed is applied first)."""
    return apply_seq(matrix, list(reversed(list(directions))))


def inverse_seq(seq: Sequence[Label]) -> list[Label]:
    return list(reversed(seq))


def mutate_quiver(quiver: UsualQuiver, k: Hashable) -> UsualQuiver:
    """Three-step quiver mutation at ``k``.

    (i) add an arrow ``i -> j`` for every path ``i -> k -> j``; (ii) reverse
    the arrows at ``k``; (iii) cancel 2-cycles pairwise.
    """
    if k not in quiver.vertices:
        raise UnknownVertex(f"no vertex {k!r}")
    arrows: dict[tuple[Hashable, Hashable], int] = defaultdict(int)
    for e, mult in quiver.arrows.items():
        arrows[e] += mult
    into = [(i, m) for (i, t), m in quiver.arrows.items() if t == k]
    out_of = [(j, m) for (s, j), m in quiver.arrows.items() if s == k]
    for i, a in into:
        for j, b in out_of:
            arrows[i, j] += a * b
    reversed_arrows: dict[tuple[Hashable, Hashable], int] = defaultdict(int)
    for (s, t), m in arrows.items():
        if s == k or t == k:
            reversed_arrows[t, s] += m
        else:
            reversed_arrows[s, t] += m
    result = {}
    for (s, t), m in reversed_arrows.items():
        net = m - reversed_arrows.get((t, s), 0)
        if net > 0:
            result[s, t] = net
    return UsualQuiver(quiver.vertices, result)


# -- framed mutation and reddening --------------------------------------------


@dataclass(frozen=True)
class FramedMatrix:
    """Exchange matrix with its C-matrix (initially the identity)."""

    principal: ExchangeMatrix
    c_matrix: Rows

    @classmethod
    def initial(cls, matrix: ExchangeMatrix) -> FramedMatrix:
        n = len(matrix)
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(matrix, ident)

    def mutate(self, k: Label) -> FramedMatrix:
        idx = self.principal.index(k)
        rows = mutate_rows(self.principal.rows + self.c_matrix, idx)
        n = len(self.principal)
        return FramedMatrix(ExchangeMatrix(self.principal.labels, rows[:n]), rows[n:])

    def c_vectors(self) -> list[tuple[int, ...]]:
        n = len(self.principal)
        return [tuple(r[j] for r in self.c_matrix) for j in range(n)]

    def sign_coherent(self) -> bool:
        return all(is_sign_coherent(c) for c in self.c_vectors())

    def is_red(self) -> bool:
        return all(v <= 0 for r in self.c_matrix for v in r)


def is_sign_coherent(values: Iterable[int]) -> bool:
    vals = list(values)
    return all(v >= 0 for v in vals) or all(v <= 0 for v in vals)


@dataclass
class SearchStats:
    explored: int = 0
    max_depth_reached: int = 0


def search_reddening(
    matrix: ExchangeMatrix,
    max_depth: int,
    *,
    allow_large: bool = False,
    stats: SearchStats | None = None,
) -> list[Label] | None:
    """Breadth-first search for a reddening sequence.

    A sequence is reddening when the final C-matrix is entrywise <= 0.
    Returns the lexicographically least shortest such sequence (in
    composition order), or ``None`` if the reachable state space was
    exhausted without finding one.  Raises :class:`DepthExceeded` if the
    depth bound cut the search short.

    Every visited C-matrix is checked for column sign-coherence.
    """
    if len(matrix) > 6 and not allow_large:
        raise SearchTooLarge(f"|I| = {len(matrix)} > 6; pass allow_large=True to override")
    stats = stats if stats is not None else SearchStats()
    labels = sorted(matrix.labels)
    start = FramedMatrix.initial(matrix)
    key0 = (start.principal.rows, start.c_matrix)
    seen = {key0}
    frontier: deque[tuple[FramedMatrix, tuple[Label, ...]]] = deque([(start, ())])
    truncated = False
    if start.is_red():
        return []
    while frontier:
        state, path = frontier.popleft()
        stats.explored += 1
        if len(path) == max_depth:
            truncated = True
            continue
        for k in labels:
            if path and path[-1] == k:
                continue
            nxt = state.mutate(k)
            if not nxt.sign_coherent():
                raise InternalLemmaViolation(f"C-matrix lost sign-coherence after {path + (k,)}")
            key = (nxt.principal.rows, nxt.c_matrix)
            if key in seen:
                continue
            seen.add(key)
            new_path = path + (k,)
            stats.max_depth_reached = max(stats.max_depth_reached, len(new_path))
            if nxt.is_red():
                return list(reversed(new_path))
            frontier.append((nxt, new_path))
    if truncated:
        raise DepthExceeded(f"no reddening sequence of length <= {max_depth}")
    return None
