import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import complete, cycle, from_nx, random_graphs
from rectlay.graph import (
    Graph,
    Nonplanar,
    dual_graph,
    euler_ok,
    is_cyclically_4_edge_connected,
    is_k_connected,
    planar_embed,
    separating_triangles,
    trace_faces,
    triangles,
)


def test_graph_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_cycle_faces():
    e = planar_embed(cycle(5))
    faces = trace_faces(e)
    assert sorted(f.walk_length for f in faces) == [5, 5]
    assert euler_ok(e)


def test_tree_has_one_face():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    faces = trace_faces(planar_embed(g))
    assert len(faces) == 1 and faces[0].walk_length == 6


def test_k5_nonplanar_witness():
    with pytest.raises(Nonplanar) as exc:
        planar_embed(complete(5))
    assert len(exc.value.witness) == 10


def test_k33_nonplanar():
    with pytest.raises(Nonplanar):
        planar_embed(from_nx(nx.complete_bipartite_graph(3, 3)))


@pytest.mark.parametrize("g", random_graphs(30, 3, 60))
def test_random_embeddings_satisfy_euler(g):
    assert euler_ok(planar_embed(g))


def test_triangles_of_k4():
    assert triangles(complete(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_separating_triangle_literal_definition():
    # triangle with two pendants on one corner: removal isolates each pendant
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])
    assert separating_triangles(g) == {(0, 1, 2)}
    assert separating_triangles(complete(4)) == set()


def test_k_connectivity():
    assert is_k_connected(complete(4), 4)
    assert not is_k_connected(cycle(6), 3)
    assert is_k_connected(cycle(6), 2)


def test_octahedron_dual_is_cube():
    octa = from_nx(nx.octahedral_graph())
    d, faces = dual_graph(octa, planar_embed(octa))
    assert d.n == 8 and d.m == 12
    assert all(d.degree(v) == 3 for v in range(d.n))
    assert is_cyclically_4_edge_connected(d)


def test_prism_is_not_cyclically_4_edge_connected():
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert not is_cyclically_4_edge_connected(prism)


@given(st.integers(3, 12))
def test_wheel_triangle_count(k):
    g = from_nx(nx.wheel_graph(k + 1))
    assert len(triangles(g)) == (k if k > 3 else 4)
