"""Exchange matrices of string diagrams, mutation, flips and P' certificates."""

from .core import BOTTOM, TOP, CartanMatrix, Letter, Origin, ShuffleWord, bottom_word, make_word, validate_cartan
from .diagram import ClosedStringId, StringDiagram, build_diagram, crosses, label, render_ascii
from .errors import StringexError
from .exchange import (
    ColouredQuiver,
    ExchangeMatrix,
    UsualQuiver,
    coloured_quiver,
    exchange_matrix,
    skew_symmetrizer,
    usual_quiver,
    usual_quiver_dot,
)
from .moves import FlipEffect, ReductionKind, flip, flip_path, reduce, reduce_to_bottom
from .mutation import FramedMatrix, apply_seq, mutate, mutate_quiver, search_reddening
from .pprime import (
    Certificate,
    certify_pprime,
    is_source_sink_extension,
    is_triangular_extension,
    sink_mutation_seq,
    source_mutation_seq,
    verify_certificate,
)

__all__ = [
    "BOTTOM",
    "TOP",
    "CartanMatrix",
    "Certificate",
    "ClosedStringId",
    "ColouredQuiver",
    "ExchangeMatrix",
    "FlipEffect",
    "FramedMatrix",
    "Letter",
    "Origin",
    "ReductionKind",
    "ShuffleWord",
    "StringDiagram",
    "StringexError",
    "UsualQuiver",
    "apply_seq",
    "bottom_word",
    "build_diagram",
    "certify_pprime",
    "coloured_quiver",
    "crosses",
    "exchange_matrix",
    "flip",
    "flip_path",
    "is_source_sink_extension",
    "is_triangular_extension",
    "label",
    "make_word",
    "mutate",
    "mutate_quiver",
    "reduce",
    "reduce_to_bottom",
    "render_ascii",
    "search_reddening",
    "sink_mutation_seq",
    "skew_symmetrizer",
    "source_mutation_seq",
    "usual_quiver",
    "usual_quiver_dot",
    "validate_cartan",
    "verify_certificate",
]
