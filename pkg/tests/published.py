"""Published instances and values used across the test suite."""

from __future__ import annotations

from stringex import bottom_word, label, make_word, validate_cartan

A1 = validate_cartan([[2, -5, -7], [-5, 2, -9], [-7, -9, 2]])
A_PRIME = validate_cartan([[2, -6, -8], [-3, 2, -10], [-4, -10, 2]])
A_ZERO23 = validate_cartan([[2, -6, -8], [-3, 2, 0], [-4, 0, 2]])
A2 = validate_cartan([[2, -1], [-1, 2]])
A_GLS = validate_cartan([[2, -3, -2], [-3, 2, -2], [-2, -2, 2]])
A_FINAL = validate_cartan([[2, -2, -3], [-2, 2, -4], [-3, -4, 2]])


def tri_word(cartan=A1):
    return make_word((1, 2, 3), (3, 1, 1, 3, 2), "BBBTTTBB", cartan)


def bfz_word():
    return make_word((1, 2, 1), (1, 2, 1), "BBBTTT", A2)


def gls_word():
    return bottom_word((1, 2, 1, 3, 1, 2, 1, 2, 3, 2), A_GLS)


def bj_word():
    return bottom_word((1, 2, 1, 3, 1, 3, 2), A_PRIME)


def final_word():
    return bottom_word((2, 1, 3, 2, 1, 3, 1, 3, 2, 2, 1), A_FINAL)


TRI_LABELS = ["1:1", "1:2", "2:1", "3:1", "3:2"]

GOLDEN_MATRICES = {
    "tri_A1": (
        tri_word,
        (),
        TRI_LABELS,
        [[0, 1, 0, 0, 0], [-1, 0, 0, 7, 0], [0, 0, 0, -9, 9], [0, -7, 9, 0, -1], [0, 0, -9, 1, 0]],
    ),
    "tri_A_prime": (
        tri_word,
        (A_PRIME,),
        TRI_LABELS,
        [[0, 1, 0, 0, 0], [-1, 0, 0, 8, 0], [0, 0, 0, -10, 10], [0, -4, 10, 0, -1], [0, 0, -10, 1, 0]],
    ),
    "tri_a23_zero": (
        tri_word,
        (A_ZERO23,),
        TRI_LABELS,
        [[0, 1, 0, 0, 0], [-1, 0, 0, 8, 0], [0, 0, 0, 0, 0], [0, -4, 0, 0, -1], [0, 0, 0, 1, 0]],
    ),
    "bfz": (
        bfz_word,
        (),
        ["1:1", "1:2", "1:3", "2:1"],
        [[0, 1, 0, -1], [-1, 0, -1, 1], [0, 1, 0, -1], [1, -1, 1, 0]],
    ),
    "b_j": (
        bj_word,
        (),
        ["1:1", "1:2", "2:1", "3:1"],
        [[0, 1, -6, 0], [-1, 0, 0, -8], [3, 0, 0, 0], [0, 4, 0, 0]],
    ),
}

BFZ_NEW_ORDER = ["1:1", "2:1", "1:2", "1:3"]
BFZ_REORDERED = [[0, -1, 1, 0], [1, 0, -1, 1], [-1, 1, 0, -1], [0, -1, 1, 0]]


def arrows(text: str) -> dict:
    """Parse ``"a->b*3, c->d"`` into ``{(label a, label b): 3, (c, d): 1}``."""
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        edge, _, mult = item.partition("*")
        src, dst = edge.split("->")
        out[label(src), label(dst)] = int(mult or 1)
    return out


# usual quiver of the gls matrix, transcribed arrow by arrow
GLS_QUIVER = arrows(
    "1:1->2:1*3, 1:2->1:1, 1:2->3:1*2, 1:3->1:2, 1:3->2:2*3,"
    "2:1->1:3*3, 2:1->3:1*2, 2:2->2:1, 2:3->2:2, 3:1->2:3*2"
)
# after mu_{1:2} o mu_{1:3}; 1:1 is a source
GLS_AFTER_SOURCE_SEQ = arrows(
    "1:1->1:2, 1:2->2:1*3, 1:3->1:2, 2:1->2:2*8, 2:1->3:1*8,"
    "2:2->1:3*3, 2:3->2:2, 3:1->1:2*2, 3:1->2:3*2"
)
# after mu_{2:2} o mu_{2:1}; 2:3 is a sink
GLS_AFTER_SINK_SEQ = arrows(
    "1:1->1:3*9, 1:1->3:1*6, 1:2->1:1, 1:2->3:1*2, 1:3->1:2,"
    "1:3->2:1*3, 2:1->1:1*3, 2:2->2:1, 2:2->2:3, 3:1->2:2*2"
)
FINAL_QUIVER = arrows(
    "1:1->3:1*3, 1:1->2:2*2, 1:2->1:1, 1:2->3:2*3, 1:3->1:2,"
    "2:1->1:1*2, 2:1->3:1*4, 2:2->2:1, 2:2->1:3*2, 2:3->2:2,"
    "3:1->2:2*4, 3:1->1:2*3, 3:2->3:1, 3:2->1:3*3"
)

# the five printed stages of the final example: (suffix start, level, source
# vertex in the labels of the full word, mutation sequence in those labels)
FINAL_STAGES = [
    (0, 2, "2:1", ["2:2", "2:3"]),
    (1, 1, "1:1", ["1:2", "1:3"]),
    (2, 3, "3:1", ["3:2"]),
    (3, 2, "2:2", ["2:3"]),
    (4, 1, "1:2", ["1:3"]),
]
