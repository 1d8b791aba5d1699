import random

import pytest

from conftest import cycle
from rectlay.augment import augment_to_4ct, biconnect
from rectlay.families import harness_seed, random_layoutable_graph
from rectlay.feasibility import embed_without_filled_triangles
from rectlay.graph import Graph, is_k_connected, planar_embed, separating_triangles, trace_faces
from rectlay.layout import bbox, contact_graph
from rectlay.rectdual import (
    compute_rel,
    dissection_problems,
    frame_for_dual,
    rectangular_dual,
    rel_problems,
    rel_to_dissection,
)


def _graphs(count, lo, hi):
    r = random.Random(harness_seed() + 7)
    return [random_layoutable_graph(r.randrange(lo, hi), r) for _ in range(count)]


def _check_augmented(g, a):
    h = a.graph
    assert h.m == 3 * h.n - 6
    assert not separating_triangles(h)
    assert set(range(g.n)) | set(a.added_vertices) == set(range(h.n))
    for u, v in h.edges:
        if u < g.n and v < g.n:
            assert g.has_edge(u, v)
    assert all(h.has_edge(u, v) for u, v in g.edges)


@pytest.mark.parametrize("g", _graphs(25, 4, 40))
def test_augmentation_is_4_connected_triangulation(g):
    _check_augmented(g, augment_to_4ct(embed_without_filled_triangles(g)))


def test_small_augmentation_is_4_connected():
    g = cycle(5)
    a = augment_to_4ct(embed_without_filled_triangles(g))
    _check_augmented(g, a)
    assert is_k_connected(a.graph, 4)


def test_biconnect_adds_no_original_edges():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    e, added = biconnect(planar_embed(g))
    assert is_k_connected(e.graph, 2)
    assert all(u in added or v in added or g.has_edge(u, v) for u, v in e.graph.edges)


def test_augment_rejects_filled_triangles():
    # K4 plus a pendant inside one triangle, outer face chosen as a triangle
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)])
    e = planar_embed(g)
    tri = next(f for f in trace_faces(e) if f.walk_length == 3 and 4 not in f.vertices)
    with pytest.raises(ValueError):
        augment_to_4ct(e.with_outer(tri.boundary[0]))


@pytest.mark.parametrize("g", _graphs(15, 4, 50))
def test_rel_and_dissection(g):
    a = augment_to_4ct(embed_without_filled_triangles(g))
    f = frame_for_dual(a, a.outer_vertex)
    lab = compute_rel(f)
    assert rel_problems(lab) == []
    d = rel_to_dissection(lab)
    assert dissection_problems(d) == []
    w, h = bbox(d.layout)
    assert w <= f.graph.n - 1 and h <= f.graph.n - 1


def test_dual_realizes_augmented_graph():
    g = cycle(6)
    a = augment_to_4ct(embed_without_filled_triangles(g))
    d = rectangular_dual(a)
    h = a.graph
    expected = {(u, v) for u, v in h.edges if a.outer_vertex not in (u, v)}
    got = contact_graph(d.layout)
    assert {(u, v) for u, v in got.edges} == expected
