"""Acceptance criteria, one test each; every run prints a pass/fail line per criterion.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, where the
lines appear in the terminal summary.
"""

import math
import random
import sys
from pathlib import Path

import networkx as nx
import numpy as np
import pytest
from scipy.spatial import ConvexHull, Delaunay

sys.path.insert(0, str(Path(__file__).parent))

from conftest import from_nx  # noqa: E402
from rectlay.augment import augment_to_4ct  # noqa: E402
from rectlay.families import (  # noqa: E402
    NMTSInstance,
    gen_ladder,
    gen_np_gadget,
    harness_seed,
    plant_violations,
    random_layoutable_graph,
    random_tree,
    trivial_lower_bound,
)
from rectlay.feasibility import (  # noqa: E402
    NONPLANAR,
    SEPARATING_TRIANGLE,
    TRIANGULATION,
    embed_without_filled_triangles,
    is_layoutable,
)
from rectlay.graph import (  # noqa: E402
    Graph,
    dual_graph,
    is_cyclically_4_edge_connected,
    is_k_connected,
    separating_triangles,
)
from rectlay.layout import Layout, Rect, area, bbox, contact_graph, validate_layout  # noqa: E402
from rectlay.oracle import brute_force_min_area  # noqa: E402
from rectlay.pipeline import layout_graph, strengthen  # noqa: E402
from rectlay.rectdual import rectangular_dual  # noqa: E402
from rectlay.trees import (  # noqa: E402
    alpha_of,
    complete_tree,
    complete_tree_dims,
    compressed_tree,
    heavy_path_partition,
    layout_complete_tree,
    layout_tree_A,
    layout_tree_B,
)

RESULTS: dict[int, str] = {}


def _record(k, ok, detail):
    RESULTS[k] = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    return ok


def _rng(off):
    return random.Random(harness_seed() + off)


def _atlas_planar(max_n):
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_n and nx.is_connected(G) and nx.check_planarity(G)[0]:
            yield from_nx(G)


def _random_layoutable(count, max_n, off):
    r = _rng(off)
    return [random_layoutable_graph(r.randrange(4, max_n + 1), r) for _ in range(count)]


def _witness_holds(g, v) -> bool:
    """Check a negative verdict with networkx only."""
    G = nx.Graph(g.sorted_edges())
    G.add_nodes_from(range(g.n))
    if v.witness_type == NONPLANAR:
        return not nx.check_planarity(nx.Graph(list(v.witness)))[0]
    if v.witness_type == TRIANGULATION:
        return g.n > 3 and g.m == 3 * g.n - 6
    if v.witness_type == SEPARATING_TRIANGLE:
        a, b, c = v.witness
        H = G.copy()
        H.remove_nodes_from((a, b, c))
        return G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c) and not nx.is_connected(H)
    return False


def criterion_1():
    atlas = list(_atlas_planar(7))
    rand = _random_layoutable(500, 100, 1)
    pos = neg = 0
    bad = []
    for g in atlas + rand:
        v = is_layoutable(g)
        if v.layoutable:
            pos += 1
            l = layout_graph(g)
            if contact_graph(l) != g or not validate_layout(l, g).ok:
                bad.append(g)
        else:
            neg += 1
            if not _witness_holds(g, v):
                bad.append(g)
    return _record(1, not bad, f"{len(atlas)} atlas graphs (n<=7) + {len(rand)} random; "
                               f"{pos} laid out exactly, {neg} witnesses verified, {len(bad)} failures")


def criterion_2():
    worst, bad = 0.0, 0
    for g in _random_layoutable(150, 100, 2):
        a = augment_to_4ct(embed_without_filled_triangles(g))
        d = rectangular_dual(a)
        N = d.framed.graph.n
        w, h = bbox(d.layout)
        if w > N - 1 or h > N - 1 or N > 5 * g.n + 5:
            bad += 1
        worst = max(worst, area(layout_graph(g)) / g.n ** 2)
    return _record(2, bad == 0, f"150 graphs, box <= (N-1)^2 and N <= 5n+5 in all; max area/n^2 = {worst:.3f}")


def _stacked(l, ids):
    """The rectangles ``ids`` follow each other along one axis without overlapping on it."""
    rs = [r for r in l.rects if r.id in ids]
    for lo, hi in (("x", "x2"), ("y", "y2")):
        rs.sort(key=lambda r: getattr(r, lo))
        if all(getattr(a, hi) <= getattr(b, lo) for a, b in zip(rs, rs[1:])):
            return True
    return False


def criterion_3():
    lad = brute_force_min_area(gen_ladder(3), 6, 6, all_witnesses=True)
    dims_ok = all(min(bbox(w)) >= 3 and _stacked(w, {2, 3, 4}) for w in lad.witnesses)
    edge = brute_force_min_area(Graph(2, [(0, 1)])).min_area
    single = brute_force_min_area(Graph(1)).min_area
    ok = lad.min_area == 9 and lad.exhausted and dims_ok and edge == 2 and single == 1
    return _record(3, ok, f"ladder(3) min area {lad.min_area} over {len(lad.witnesses)} witnesses "
                          f"(all >= 3x3 with rungs stacked: {dims_ok}); edge {edge}; vertex {single}")


def criterion_4():
    r = _rng(4)
    bad = 0
    for _ in range(1000):
        n = int(math.exp(r.uniform(0, math.log(10_000))))
        t = random_tree(n, r)
        p = heavy_path_partition(t)
        a = area(layout_tree_A(t))
        b = area(layout_tree_B(t, p))
        if a != t.n * t.depth or b != t.n * compressed_tree(t, p).depth \
                or b > t.n * (math.floor(math.log2(t.n)) + 1):
            bad += 1
    return _record(4, bad == 0, f"1000 random trees (n log-uniform up to 10^4), {bad} mismatches")


def criterion_5():
    anchors = [complete_tree_dims(3, c) for c in (1, 2, 3)]
    built = all(bbox(layout_complete_tree(3, c))[::-1] == complete_tree_dims(3, c)
                and validate_layout(layout_complete_tree(3, c), complete_tree(3, c).to_graph()).ok
                for c in range(1, 7))
    ratios = []
    for c in range(1, 11):
        h, w = complete_tree_dims(3, c)
        ratios.append(h * w / ((3 ** (c + 1) - 1) // 2))
    alpha_ok = True
    worst = 0.0
    for m, l in ((1, 1), (1, 2), (2, 1)):
        target = float(alpha_of(m, l))
        for c in range(6, 13):
            h, w = complete_tree_dims(3, c, m, l)
            got = math.log(max(h, w)) / math.log((3 ** (c + 1) - 1) // 2)
            worst = max(worst, abs(got - target) / target)
            alpha_ok &= abs(got - target) <= 0.25 * target
    ok = anchors == [(2, 6), (7, 9), (10, 24)] and built and max(ratios) <= 8 and alpha_ok
    return _record(5, ok, f"anchors {anchors}; layouts match recurrence for c<=6: {built}; "
                          f"max area/n {max(ratios):.3f} (c<=10); worst alpha deviation {worst:.1%}")


def criterion_6():
    r = _rng(6)
    done = {"nested": 0, "shear": 0}
    bad = 0
    while sum(done.values()) < 200:
        kind = "nested" if done["nested"] <= done["shear"] else "shear"
        g = random_layoutable_graph(r.randrange(5, 40), r)
        l = layout_graph(g)
        h, dropped = plant_violations(l, g, r.randrange(1, 4), r, kind)
        if not dropped:
            continue
        done[kind] += 1
        s = strengthen(l, h)
        if not validate_layout(s, h).ok:
            bad += 1
    return _record(6, bad == 0, f"{done['nested']} nested + {done['shear']} shear planted cases, {bad} failures")


def criterion_7():
    bad = checked = 0
    for g in _random_layoutable(150, 60, 7):
        checked += 1
        bad += area(layout_graph(g)) < trivial_lower_bound(g)
    r = _rng(70)
    for _ in range(100):
        t = random_tree(r.randrange(1, 500), r)
        checked += 1
        bad += area(layout_tree_B(t, heavy_path_partition(t))) < trivial_lower_bound(t.to_graph())
    for c in range(1, 7):
        checked += 1
        bad += area(layout_complete_tree(3, c)) < trivial_lower_bound(complete_tree(3, c).to_graph())
    return _record(7, bad == 0, f"{checked} layouts checked against the degree/perimeter bound, {bad} below it")


def _random_triangulation(n, r):
    """Delaunay triangulation of random points plus an apex over the hull: n + 1 vertices."""
    pts = np.random.default_rng(r.randrange(1 << 30)).random((n, 2))
    G = nx.Graph()
    for s in Delaunay(pts).simplices:
        a, b, c = map(int, s)
        G.add_edges_from([(a, b), (b, c), (a, c)])
    G.add_edges_from((n, int(v)) for v in ConvexHull(pts).vertices)
    return from_nx(G)


def criterion_8():
    r = _rng(8)
    dual_bad = 0
    for _ in range(50):
        g = random_layoutable_graph(r.randrange(4, 10), r)
        a = augment_to_4ct(embed_without_filled_triangles(g))
        if a.graph.n > 30:
            a = augment_to_4ct(embed_without_filled_triangles(random_layoutable_graph(4, r)))
        d, _ = dual_graph(a.graph, a.embedding)
        ok = nx.check_planarity(d.to_networkx())[0] and all(d.degree(v) == 3 for v in range(d.n)) \
            and is_cyclically_4_edge_connected(d)
        dual_bad += not ok
    tris = [g for g in _atlas_planar(7) if g.n >= 4 and g.m == 3 * g.n - 6]
    tris += [_random_triangulation(r.randrange(7, 12), r) for _ in range(150)]
    lemma_bad = sum(is_k_connected(g, 4) != (not separating_triangles(g)) for g in tris)
    return _record(8, dual_bad == 0 and lemma_bad == 0,
                   f"50 augmented duals planar/cubic/cyclically 4-edge-connected ({dual_bad} bad); "
                   f"{len(tris)} triangulations n<=12 (all n<=7 exhaustively), "
                   f"4-connected iff no separating triangle ({lemma_bad} bad)")


def criterion_9():
    gd = gen_np_gadget(NMTSInstance((2,), (3,), (5,)))
    ok = gd.instance.deltas == (5,) and (gd.target_w, gd.target_h) == (16, 15) and gd.graph.n == 71 \
        and is_layoutable(gd.graph).layoutable
    return _record(9, ok, f"deltas {gd.instance.deltas}, W={gd.target_w}, H={gd.target_h}, "
                          f"{gd.graph.n} vertices, layoutable={is_layoutable(gd.graph).layoutable}")


def criterion_10():
    bad = checks = 0
    for g in _random_layoutable(100, 40, 10):
        l = layout_graph(g)
        for v in range(g.n):
            sub, m = g.induced(u for u in range(g.n) if u != v)
            rects = tuple(Rect(m[r.id], r.x, r.y, r.w, r.h) for r in l.vertex_rects if r.id != v)
            checks += 1
            bad += not validate_layout(Layout(rects), sub).ok
    return _record(10, bad == 0, f"100 layouts, {checks} single-rectangle deletions, {bad} invalid")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(crit):
    assert crit(), RESULTS.get(CRITERIA.index(crit) + 1)


if __name__ == "__main__":
    for crit in CRITERIA:
        crit()
        print(RESULTS[CRITERIA.index(crit) + 1], flush=True)
