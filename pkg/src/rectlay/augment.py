"""Vertex augmentation of a filled-triangle-free embedding to a 4-connected triangulation."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .feasibility import filled_triangles
from .graph import Dart, Graph, RotationEmbedding, trace_faces


@dataclass(frozen=True)
class AugmentedGraph:
    graph: Graph
    embedding: RotationEmbedding
    added_vertices: frozenset[int]
    origin: Graph
    # the vertex put into the outer face; the dual step removes it
    outer_vertex: int


class _Rot:
    """Mutable ccw rotation system used while inserting vertices."""

    def __init__(self, e: RotationEmbedding):
        self.rot = [list(r) for r in e.rotation]
        self.outer = e.outer

    @property
    def n(self) -> int:
        return len(self.rot)

    def ccw_prev(self, v: int, u: int) -> int:
        r = self.rot[v]
        return r[r.index(u) - 1]

    def ccw_next(self, v: int, u: int) -> int:
        r = self.rot[v]
        return r[(r.index(u) + 1) % len(r)]

    def insert_before(self, v: int, anchor: int, z: int) -> None:
        r = self.rot[v]
        r.insert(r.index(anchor), z)

    def new_vertex(self, rotation: list[int]) -> int:
        self.rot.append(list(rotation))
        return len(self.rot) - 1

    def face(self, d: Dart) -> list[int]:
        """Vertices of the face left of ``d``, starting at ``d[0]``."""
        out = []
        cur = d
        while True:
            out.append(cur[0])
            u, v = cur
            cur = (v, self.ccw_prev(v, u))
            if cur == d:
                return out

    def graph(self) -> Graph:
        return Graph(self.n, {(min(v, w), max(v, w)) for v in range(self.n) for w in self.rot[v]})

    def freeze(self, outer: Dart | None = None) -> RotationEmbedding:
        g = self.graph()
        return RotationEmbedding(g, tuple(tuple(r) for r in self.rot), outer or self.outer)


def _articulation_rotation(r: _Rot):
    g = nx.Graph()
    g.add_nodes_from(range(r.n))
    for v in range(r.n):
        g.add_edges_from((v, w) for w in r.rot[v])
    cuts = sorted(nx.articulation_points(g))
    if not cuts:
        return None
    block = {}
    for i, comp in enumerate(nx.biconnected_component_edges(g)):
        for a, b in comp:
            block[(a, b)] = block[(b, a)] = i
    return cuts[0], block


def _biconnect(r: _Rot) -> list[int]:
    added = []
    while True:
        found = _articulation_rotation(r)
        if found is None:
            return added
        v, block = found
        for u in list(r.rot[v]):
            w = r.ccw_next(v, u)
            if block[(v, u)] != block[(v, w)]:
                break
        else:  # pragma: no cover - an articulation vertex always has such a pair
            raise RuntimeError(f"no block change around articulation vertex {v}")
        # angle u-v-w lies on the face through darts w->v, v->u
        y = r.ccw_next(w, v)
        z = r.new_vertex([u, w])
        r.insert_before(u, v, z)
        r.insert_before(w, y, z)
        added.append(z)


def biconnect(e: RotationEmbedding) -> tuple[RotationEmbedding, frozenset[int]]:
    """Join consecutive neighbours in different blocks around each articulation vertex."""
    r = _Rot(e)
    added = _biconnect(r)
    return r.freeze(), frozenset(added)


def _first_chord(r: _Rot, cycle: list[int]) -> int | None:
    k = len(cycle)
    on = {v: i for i, v in enumerate(cycle)}
    start = cycle.index(min(cycle))
    for j in range(k):
        i = (start + j) % k
        x = cycle[i]
        nbrs = (cycle[i - 1], cycle[(i + 1) % k])
        for y in r.rot[x]:
            if y in on and y not in nbrs:
                return i
    return None


def _triangulate_face(r: _Rot, d: Dart, added: list[int]) -> int:
    cycle = r.face(d)
    while True:
        i = _first_chord(r, cycle)
        if i is None:
            break
        k = len(cycle)
        u, x, v = cycle[i - 1], cycle[i], cycle[(i + 1) % k]
        t = cycle[i - 2]
        nu = r.new_vertex([v, u, x])
        r.insert_before(x, u, nu)
        r.insert_before(u, t, nu)
        r.insert_before(v, x, nu)
        cycle[i] = nu
        added.append(nu)
    nf = r.new_vertex(list(cycle))
    for i, c in enumerate(cycle):
        r.insert_before(c, cycle[i - 1], nf)
    added.append(nf)
    return nf


def triangulate_faces(e: RotationEmbedding, origin: Graph | None = None,
                      prior_added: frozenset[int] = frozenset()) -> AugmentedGraph:
    """Triangulate every face without creating separating triangles.

    Chords of a face are removed first by replacing an endpoint on the facial
    cycle with a fresh vertex; the chord-free cycle then gets a hub vertex.
    """
    r = _Rot(e)
    outer_face = set(e.face_of(e.outer).boundary)
    added: list[int] = []
    outer_vertex = None
    for f in trace_faces(e):
        is_outer = f.boundary[0] in outer_face
        if f.walk_length == 3 and not is_outer:
            continue
        d = f.boundary[0]
        hub = _triangulate_face(r, d, added)
        if is_outer:
            outer_vertex = hub
    emb = r.freeze(outer=(outer_vertex, r.rot[outer_vertex][0]))
    return AugmentedGraph(emb.graph, emb, frozenset(added) | prior_added,
                          origin if origin is not None else e.graph, outer_vertex)


def augment_to_4ct(e: RotationEmbedding) -> AugmentedGraph:
    if e.graph.n < 4:
        raise ValueError("augmentation needs at least 4 vertices")
    bad = filled_triangles(e)
    if bad:
        raise ValueError(f"precondition violated: embedding has filled triangles {sorted(bad)[:3]}")
    b, added = biconnect(e)
    return triangulate_faces(b, origin=e.graph, prior_added=added)
