"""Membership certificates for the class P'.

P' is the smallest class of skew-symmetrizable matrices containing the
1x1 zero matrix and closed under mutation and source-sink extension.  The
empty 0x0 matrix is admitted as the replay base, so the 1x1 zero matrix is
simply the first extension step.

A certificate for the exchange matrix of a word records:

* the flips that reduce the word to an all-bottom word (``outer_mutations``),
* for the all-bottom word ``j``, one layer per letter ``j_1, j_2, ...``:
  the source sequence ``mu`` for the first letter's level and the column of
  ``(j_1, 1)`` after applying it.  Deleting that vertex leaves the matrix of
  ``j_{>=2}``, with indices on level ``j_1`` shifted down by one.

Replay runs innermost layer first, starting from the empty matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import BOTTOM, CartanMatrix, ShuffleWord, bottom_word
from .diagram import ClosedStringId, build_diagram
from .errors import InternalLemmaViolation, LevelEmpty, StringexError, UnknownVertex
from .exchange import ExchangeMatrix, Label, exchange_matrix
from .moves import reduce_to_bottom
from .mutation import apply_seq, is_sign_coherent


class NotBottomWord(StringexError):
    pass


# -- predicates ---------------------------------------------------------------


def is_triangular_extension(matrix: ExchangeMatrix, part: Iterable[Label]) -> bool:
    """Whether the block ``b_xy`` (``x`` in ``part``, ``y`` outside) has one weak sign."""
    part = set(part)
    missing = part - set(matrix.labels)
    if missing:
        raise UnknownVertex(f"unknown vertices {sorted(missing)}")
    cross = [
        matrix.rows[i][j]
        for i, x in enumerate(matrix.labels)
        if x in part
        for j, y in enumerate(matrix.labels)
        if y not in part
    ]
    return is_sign_coherent(cross)


def is_source_sink_extension(matrix: ExchangeMatrix, v: Label) -> bool:
    return is_sign_coherent(matrix.column(v).values())


# -- source / sink sequences ----------------------------------------------------


def _first_level_count(word: ShuffleWord, last: bool) -> tuple[int, int]:
    if not word.letters:
        raise NotBottomWord("word is empty")
    if not word.is_all_bottom():
        raise NotBottomWord("source/sink sequences are defined for all-bottom words only")
    level = word[-1].value if last else word[0].value
    return level, build_diagram(word).closed_count(level)


def source_mutation_seq(word: ShuffleWord) -> list[Label]:
    """``mu_(j1,2) o ... o mu_(j1,m)``: makes ``(j1, 1)`` a source (column >= 0)."""
    level, m = _first_level_count(word, last=False)
    if m == 0:
        raise LevelEmpty(f"level {level} has no closed strings")
    return [ClosedStringId(level, r) for r in range(2, m + 1)]


def sink_mutation_seq(word: ShuffleWord) -> list[Label]:
    """``mu_(jl,m'-1) o ... o mu_(jl,1)``: makes ``(jl, m')`` a sink (column <= 0)."""
    level, m = _first_level_count(word, last=True)
    if m == 0:
        raise LevelEmpty(f"level {level} has no closed strings")
    return [ClosedStringId(level, r) for r in range(m - 1, 0, -1)]


# -- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    level: int
    vertex: Label | None
    mu: tuple[Label, ...] = ()
    connection: Mapping[Label, int] = field(default_factory=dict)

    @property
    def skipped(self) -> bool:
        return self.vertex is None

    def to_json(self) -> dict:
        return {
            "connection": {str(k): v for k, v in sorted(self.connection.items())},
            "level": self.level,
            "mu": [str(x) for x in self.mu],
            "skipped": self.skipped,
            "vertex": None if self.vertex is None else str(self.vertex),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Step:
        vertex = data.get("vertex")
        if data.get("skipped", vertex is None) != (vertex is None):
            raise ValueError("step 'skipped' flag disagrees with 'vertex'")
        return cls(
            level=int(data["level"]),
            vertex=None if vertex is None else ClosedStringId.parse(vertex),
            mu=tuple(ClosedStringId.parse(x) for x in data.get("mu", [])),
            connection={ClosedStringId.parse(k): int(v) for k, v in data.get("connection", {}).items()},
        )


@dataclass(frozen=True)
class Certificate:
    steps: tuple[Step, ...]
    outer_mutations: tuple[Label, ...]
    label_map: Mapping[Label, Label]
    target_labels: tuple[Label, ...]
    symmetrizer: tuple[int, ...]

    @property
    def extension_count(self) -> int:
        return sum(1 for s in self.steps if not s.skipped)

    def to_json(self) -> dict:
        return {
            "label_map": {str(k): str(v) for k, v in sorted(self.label_map.items())},
            "outer_mutations": [str(x) for x in self.outer_mutations],
            "steps": [s.to_json() for s in self.steps],
            "symmetrizer": list(self.symmetrizer),
            "target_labels": [str(x) for x in self.target_labels],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, data: Mapping) -> Certificate:
        return cls(
            steps=tuple(Step.from_json(s) for s in data["steps"]),
            outer_mutations=tuple(ClosedStringId.parse(x) for x in data.get("outer_mutations", [])),
            label_map={
                ClosedStringId.parse(k): ClosedStringId.parse(v)
                for k, v in data.get("label_map", {}).items()
            },
            target_labels=tuple(ClosedStringId.parse(x) for x in data.get("target_labels", [])),
            symmetrizer=tuple(int(s) for s in data["symmetrizer"]),
        )


def certify_bottom(word: ShuffleWord) -> list[Step]:
    """Layers for an all-bottom word, outermost (first letter) first."""
    if not word.is_all_bottom():
        raise NotBottomWord("certify_bottom needs an all-bottom word")
    values = word.values
    steps = []
    for t in range(len(values) - 1):
        suffix = bottom_word(values[t:], word.cartan)
        level = values[t]
        if build_diagram(suffix).closed_count(level) == 0:
            steps.append(Step(level=level, vertex=None))
            continue
        mu = source_mutation_seq(suffix)
        mutated = apply_seq(exchange_matrix(suffix), mu)
        v = ClosedStringId(level, 1)
        column = mutated.column(v)
        if not is_sign_coherent(column.values()):
            raise InternalLemmaViolation(
                f"column of {v} after {[str(x) for x in mu]} is not sign-coherent: {column}"
            )
        steps.append(Step(level=level, vertex=v, mu=tuple(mu), connection=column))
    return steps


def certify_pprime(word: ShuffleWord) -> Certificate:
    reduction = reduce_to_bottom(word)
    steps = certify_bottom(reduction.bottom)
    return Certificate(
        steps=tuple(steps),
        outer_mutations=tuple(reduction.mutations),
        label_map=dict(reduction.label_map),
        target_labels=build_diagram(word).I,
        symmetrizer=word.cartan.symmetrizer,
    )


@dataclass
class Replay:
    ok: bool
    matrix: ExchangeMatrix | None = None
    failed_step: int | None = None
    reason: str = ""
    stages: list[ExchangeMatrix] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _adjoin(
    matrix: ExchangeMatrix, v: Label, column: Mapping[Label, int], sym: tuple[int, ...]
) -> ExchangeMatrix:
    """Add vertex ``v`` with column ``b_xv``; the row is forced by the symmetrizer."""
    s_v = sym[v.level - 1]
    row = {}
    for x, b in column.items():
        num = -sym[x.level - 1] * b
        if num % s_v:
            raise ValueError(f"row entry b_{v},{x} = {num}/{s_v} is not an integer")
        row[x] = num // s_v
    labels = tuple(sorted(matrix.labels + (v,)))
    old = matrix.as_dict()
    rows = []
    for x in labels:
        r = []
        for z in labels:
            if x == v:
                r.append(0 if z == v else row[z])
            elif z == v:
                r.append(column[x])
            else:
                r.append(old[x, z])
        rows.append(tuple(r))
    return ExchangeMatrix(labels, tuple(rows))


def replay_certificate(cert: Certificate) -> Replay:
    """Rebuild the certified matrix from the empty matrix.

    For each non-skipped layer (innermost first): shift indices on the
    layer's level up by one, apply ``mu``, adjoin the vertex with its
    connection column (checking it is sign-coherent), then undo ``mu``.
    Finally apply the outer mutations and the label map.
    ``stages`` records the matrix after each layer, innermost first.
    """
    sym = cert.symmetrizer
    current = ExchangeMatrix((), ())
    stages = []
    for idx in range(len(cert.steps) - 1, -1, -1):
        step = cert.steps[idx]
        if step.skipped:
            stages.append(current)
            continue
        try:
            if not 1 <= step.level <= len(sym) or step.vertex.level != step.level:
                raise ValueError("vertex level disagrees with step level")
            if step.vertex.index != 1:
                raise ValueError("new vertex must be the first string of its level")
            shift = {x: ClosedStringId(x.level, x.index + 1) for x in current.labels if x.level == step.level}
            current = current.relabeled(shift)
            if set(step.connection) != set(current.labels):
                raise ValueError("connection does not cover exactly the remaining vertices")
            current = apply_seq(current, step.mu)
            if not is_sign_coherent(step.connection.values()):
                raise ValueError(f"connection column of {step.vertex} is not sign-coherent")
            current = _adjoin(current, step.vertex, step.connection, sym)
            if not is_source_sink_extension(current, step.vertex):
                raise ValueError(f"adjoining {step.vertex} is not a source-sink extension")
            current = apply_seq(current, list(reversed(step.mu)))
        except (ValueError, StringexError) as exc:
            return Replay(False, current, idx, str(exc), stages)
        stages.append(current)
    try:
        current = apply_seq(current, cert.outer_mutations)
    except StringexError as exc:
        return Replay(False, current, None, f"outer mutations: {exc}", stages)
    current = current.relabeled(cert.label_map)
    return Replay(True, current, None, "", stages)


def verify_certificate(cert: Certificate, matrix: ExchangeMatrix) -> bool:
    return bool(check_certificate(cert, matrix))


def check_certificate(cert: Certificate, matrix: ExchangeMatrix) -> Replay:
    """Replay ``cert`` and compare with ``matrix``; reports the first failure."""
    result = replay_certificate(cert)
    if not result.ok:
        return result
    if cert.target_labels and set(cert.target_labels) != set(matrix.labels):
        return Replay(False, result.matrix, None, "target labels differ from the matrix labels", result.stages)
    if not result.matrix.same_as(matrix):
        return Replay(False, result.matrix, None, "replayed matrix differs from the target", result.stages)
    return result


def is_bottom_word(word: ShuffleWord) -> bool:
    return all(l.origin is BOTTOM for l in word)


def certificate_for(cartan: CartanMatrix, bottom: Iterable[int]) -> Certificate:
    """Convenience: certificate for the all-bottom word over ``cartan``."""
    return certify_pprime(bottom_word(tuple(bottom), cartan))
