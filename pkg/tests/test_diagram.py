from __future__ import annotations

import random

import pytest

from stringex import build_diagram, crosses, label, make_word, render_ascii, validate_cartan
from stringex.errors import UnknownString
from stringex.generators import random_instance

from published import gls_word, tri_word


def test_tri_diagram():
    d = build_diagram(tri_word())
    assert [len(d.nodes_by_level[k]) for k in (1, 2, 3)] == [3, 2, 3]
    assert [d.closed_count(k) for k in (1, 2, 3)] == [2, 1, 2]
    assert [str(x) for x in d.I] == ["1:1", "1:2", "2:1", "3:1", "3:2"]
    assert [m.epsilon for m in d.nodes] == [1, 1, 1, -1, -1, -1, 1, 1]


def test_gls_diagram():
    d = build_diagram(gls_word())
    assert [d.closed_count(k) for k in (1, 2, 3)] == [3, 3, 1]
    assert len(d.I) == 7


def test_single_triangle():
    d = build_diagram(make_word((), (1,), "B", validate_cartan([[2]])))
    assert len(d.nodes) == 1
    assert d.I == ()


def test_crosses():
    d = build_diagram(tri_word())
    z = label("3:1")
    assert (d.string(z).left_pos, d.string(z).right_pos) == (1, 6)
    assert crosses(d, z, 3)
    assert not crosses(d, z, 7)
    assert not crosses(d, label("1:1"), 2)
    with pytest.raises(UnknownString):
        crosses(d, label("2:2"), 3)


def test_structural_invariants():
    rng = random.Random(3)
    for _ in range(300):
        w = random_instance(rng)
        d = build_diagram(w)
        assert sum(len(ms) for ms in d.nodes_by_level.values()) == len(w)
        assert list(d.I) == sorted(d.I)
        for cs in d.closed_strings:
            ms = d.nodes_by_level[cs.id.level]
            assert (cs.left_pos, cs.right_pos) == (ms[cs.id.index - 1].triangle_pos, ms[cs.id.index].triangle_pos)
            # endpoints and the two outermost triangles are never crossed from inside
            assert not crosses(d, cs.id, cs.left_pos)
            assert not crosses(d, cs.id, cs.right_pos)
            assert not crosses(d, cs.id, 1)
            assert not crosses(d, cs.id, len(w))


def test_render_ascii():
    text = render_ascii(build_diagram(tri_word()))
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[1].startswith(" 1 |")
    assert lines[1].count("(+1)") == 2 and lines[1].count("(-1)") == 1
    assert lines[3].count("(+3)") == 2 and lines[3].count("(-3)") == 1
    # closed segments between nodes are drawn with '='
    assert "(+1)==(+1)" in lines[1]
    assert render_ascii(build_diagram(tri_word())) == text
