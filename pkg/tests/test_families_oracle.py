import random

import pytest

from conftest import complete, cycle
from rectlay.families import (
    NMTSInstance,
    UnbalancedInstance,
    gen_accordion,
    gen_ij_ladder,
    gen_ladder,
    gen_np_gadget,
    random_layoutable_graph,
    trivial_lower_bound,
)
from rectlay.feasibility import is_layoutable
from rectlay.graph import Graph
from rectlay.layout import Layout, Rect, contact_graph, validate_layout
from rectlay.oracle import BudgetExceeded, brute_force_min_area, extremal_path
from rectlay.pipeline import layout_graph


def test_ladder_shape():
    g = gen_ladder(3)
    assert g.n == 5 and g.m == 8
    assert g.sorted_edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
    assert gen_ladder(1).sorted_edges() == [(0, 2), (1, 2)]
    assert gen_ladder(4, subdivide=2).n == 6 + 3 * 2


def test_ij_ladder_shape():
    g = gen_ij_ladder(6, 6)
    assert g.n == 14
    # middle rungs meet only through the internal ladder
    assert not g.has_edge(4, 5)
    assert all(g.has_edge(4, y) and g.has_edge(5, y) for y in range(8, 14))
    assert is_layoutable(g).layoutable


def test_accordion_shape():
    assert gen_accordion(1).n == 5
    assert gen_accordion(5, True).n == 19
    g = gen_accordion(3, True)
    assert g.n == 13 and is_layoutable(g).layoutable


def test_nmts_instance():
    inst = NMTSInstance((2,), (3,), (5,))
    assert inst.deltas == (5,) and inst.B_star == 5
    with pytest.raises(UnbalancedInstance):
        NMTSInstance((1,), (1,), (3,))


def test_gadget_metadata():
    gd = gen_np_gadget(NMTSInstance((2,), (3,), (5,)))
    assert gd.graph.n == 71
    assert (gd.target_w, gd.target_h) == (16, 15)
    assert is_layoutable(gd.graph).layoutable
    assert set(gd.annotations) == set(range(71))


def test_gadget_scaling():
    inst = NMTSInstance((1, 2), (2, 1), (3, 3))
    gd = gen_np_gadget(inst, scale_small=True)
    assert min(gd.instance.deltas) >= 3
    assert validate_layout(layout_graph(gd.graph), gd.graph).ok


def test_trivial_lower_bound():
    assert trivial_lower_bound(Graph(9, [(0, i) for i in range(1, 9)])) == 10
    assert trivial_lower_bound(Graph(2, [(0, 1)])) == 2


def test_contact_graph_corners_excluded():
    side = Layout((Rect(0, 0, 0, 1, 1), Rect(1, 1, 0, 1, 1)))
    corner = Layout((Rect(0, 0, 0, 1, 1), Rect(1, 1, 1, 1, 1)))
    assert contact_graph(side).m == 1
    assert contact_graph(corner).m == 0


def test_oracle_anchors():
    assert brute_force_min_area(Graph(1)).min_area == 1
    assert brute_force_min_area(Graph(2, [(0, 1)])).min_area == 2
    assert brute_force_min_area(cycle(4)).min_area == 4
    assert brute_force_min_area(cycle(3)).min_area == 4


def test_oracle_ladder():
    g = gen_ladder(3)
    res = brute_force_min_area(g, 6, 6, all_witnesses=True)
    assert res.min_area == 9 and res.exhausted
    assert res.witnesses
    for w in res.witnesses:
        assert validate_layout(w, g).ok
        assert contact_graph(w) == g


def test_oracle_box_too_small():
    res = brute_force_min_area(gen_ladder(3), 2, 2)
    assert res.min_area is None and res.exhausted


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_min_area(gen_ladder(4), 6, 6, budget=50)


def test_oracle_never_beats_lower_bound(rng):
    for _ in range(5):
        g = random_layoutable_graph(rng.randrange(3, 6), rng)
        res = brute_force_min_area(g, 5, 5)
        assert res.min_area >= trivial_lower_bound(g)
        assert validate_layout(res.witness, g).ok


def test_extremal_paths_of_disjoint_subgraphs_are_disjoint():
    r = random.Random(5)
    for _ in range(10):
        g = random_layoutable_graph(r.randrange(8, 40), r)
        l = layout_graph(g)
        order = sorted(range(g.n), key=lambda v: (l.by_id()[v].x, l.by_id()[v].y))
        a, b = set(order[: g.n // 2]), set(order[g.n // 2:])
        for part in (a, b):
            pv, ph = extremal_path(l, part, True), extremal_path(l, part, False)
            for path in (pv, ph):
                if path is not None:
                    assert set(path) <= part
        pa = extremal_path(l, a) or []
        pb = extremal_path(l, b, False) or []
        assert not set(pa) & set(pb)


def test_extremal_path_single_column():
    l = Layout(tuple(Rect(i, 0, i, 1, 1) for i in range(4)))
    assert extremal_path(l, range(4)) == [0, 1, 2, 3]
    assert extremal_path(l, range(4), vertical=False) == [0]
