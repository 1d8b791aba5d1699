import random

import pytest
from hypothesis import given, strategies as st

from conftest import complete, cycle
from rectlay.families import harness_seed, plant_violations, random_layoutable_graph, trivial_lower_bound
from rectlay.feasibility import NotLayoutable
from rectlay.graph import Graph
from rectlay.layout import STRONG, WEAK, Layout, Rect, area, corner_contacts, validate_layout
from rectlay.pipeline import NotWeakLayout, layout_graph, remove_corner_contacts, strengthen


def _graphs(count, lo, hi, off):
    r = random.Random(harness_seed() + off)
    return [random_layoutable_graph(r.randrange(lo, hi), r) for _ in range(count)]


@pytest.mark.parametrize("g", [Graph(1), Graph(2, [(0, 1)]), cycle(3), Graph(3, [(0, 1), (1, 2)]),
                               Graph(3, [(0, 2), (2, 1)]), cycle(4), cycle(7)])
def test_small_graphs(g):
    l = layout_graph(g)
    assert validate_layout(l, g).ok


@pytest.mark.parametrize("g", _graphs(20, 4, 80, 11))
def test_random_layouts_are_strong(g):
    l = layout_graph(g)
    assert l.mode == STRONG
    assert validate_layout(l, g).ok
    assert area(l) >= trivial_lower_bound(g)


def test_triangulation_rejected():
    with pytest.raises(NotLayoutable):
        layout_graph(complete(4))


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        layout_graph(Graph(3, [(0, 1)]))


def test_strengthen_nested():
    # b sits on top of a, fully inside a's top side; the pair is not an edge
    l = Layout((Rect(0, 0, 0, 4, 1), Rect(1, 2, 1, 2, 1), Rect(2, 4, 0, 1, 2)), WEAK)
    g = Graph(3, [(0, 2), (1, 2)])
    s = strengthen(l, g)
    assert validate_layout(s, g).ok


def test_strengthen_shear():
    l = Layout((Rect(0, 0, 0, 2, 1), Rect(1, 1, 1, 2, 1)), WEAK)
    s = strengthen(l, Graph(2))
    assert validate_layout(s, Graph(2)).ok


def test_strengthen_needs_weak_layout():
    l = Layout((Rect(0, 0, 0, 1, 1), Rect(1, 2, 0, 1, 1)), WEAK)
    with pytest.raises(NotWeakLayout):
        strengthen(l, Graph(2, [(0, 1)]))


@pytest.mark.parametrize("kind", ["nested", "shear", None])
def test_strengthen_planted(kind):
    r = random.Random(harness_seed() + 3)
    for _ in range(6):
        g = random_layoutable_graph(r.randrange(6, 40), r)
        l = layout_graph(g)
        h, dropped = plant_violations(l, g, r.randrange(1, 5), r, kind)
        s = strengthen(l, h)
        assert validate_layout(s, h).ok


@pytest.mark.parametrize("g", _graphs(10, 4, 40, 13))
def test_corner_removal(g):
    l = layout_graph(g)
    s = remove_corner_contacts(l, g)
    assert not corner_contacts(s.rects)
    assert validate_layout(s, g).ok


@pytest.mark.parametrize("g", _graphs(8, 5, 40, 17))
def test_vertex_deletion_keeps_strong(g):
    l = layout_graph(g)
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        sub, m = g.induced(keep)
        rects = tuple(Rect(m[r.id], r.x, r.y, r.w, r.h) for r in l.vertex_rects if r.id != v)
        assert validate_layout(Layout(rects), sub).ok


@given(st.integers(4, 30), st.integers(0, 10_000))
def test_layout_property(n, seed):
    g = random_layoutable_graph(n, random.Random(seed))
    assert validate_layout(layout_graph(g), g).ok
