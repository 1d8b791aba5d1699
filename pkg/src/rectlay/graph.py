"""Graph and planar-embedding primitives.

Rotation systems are stored counterclockwise: ``rotation[v]`` lists the
neighbours of ``v`` in ccw order.  A face is traced with the face kept on
the left of every dart, so bounded faces come out ccw and the outer face cw.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import networkx as nx

Dart = tuple[int, int]


class Nonplanar(ValueError):
    """Raised by :func:`planar_embed`; ``witness`` is a Kuratowski subgraph edge list."""

    def __init__(self, witness: list[tuple[int, int]]):
        super().__init__(f"graph is not planar (Kuratowski witness with {len(witness)} edges)")
        self.witness = witness


class NotTriangulation(ValueError):
    pass


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es: set[tuple[int, int]] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm(u, v)
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def induced(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph, relabelled to ``0..k-1`` in increasing old-id order."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(order), es), index

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g


def components(n: int, adj, removed: frozenset[int] | set[int] = frozenset()) -> list[list[int]]:
    """Connected components of the graph with ``removed`` vertices deleted."""
    seen = set(removed)
    comps = []
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g.n, g.adj)) == 1


@dataclass(frozen=True)
class FaceWalk:
    boundary: tuple[Dart, ...]

    @property
    def walk_length(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.boundary)

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class RotationEmbedding:
    """Combinatorial embedding plus an outer face.

    ``outer`` is a dart whose left face is the outer face (``None`` only for
    the edgeless one-vertex graph).
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer: Dart | None
    _pos: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        pos = {}
        for v, rot in enumerate(self.rotation):
            for i, w in enumerate(rot):
                pos[(v, w)] = i
        object.__setattr__(self, "_pos", pos)

    def ccw_next(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[(v, u)] + 1) % len(rot)]

    def ccw_prev(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[(v, u)] - 1) % len(rot)]

    def next_dart(self, d: Dart) -> Dart:
        """Successor of ``d`` on the face to its left."""
        u, v = d
        return (v, self.ccw_prev(v, u))

    def face_of(self, d: Dart) -> FaceWalk:
        walk = [d]
        cur = self.next_dart(d)
        while cur != d:
            walk.append(cur)
            cur = self.next_dart(cur)
        return FaceWalk(tuple(walk))

    def outer_face(self) -> FaceWalk:
        if self.outer is None:
            return FaceWalk(())
        return self.face_of(self.outer)

    def with_outer(self, d: Dart | None) -> "RotationEmbedding":
        return RotationEmbedding(self.graph, self.rotation, d)


def trace_faces(e: RotationEmbedding) -> list[FaceWalk]:
    """All face walks, each starting at its lexicographically least dart."""
    g = e.graph
    if g.m == 0:
        return [FaceWalk(())]
    seen: set[Dart] = set()
    faces = []
    for u in range(g.n):
        for v in sorted(g.adj[u]):
            if (u, v) in seen:
                continue
            f = e.face_of((u, v))
            seen.update(f.boundary)
            faces.append(f)
    return faces


def select_outer(e: RotationEmbedding) -> RotationEmbedding:
    """Re-designate the outer face: longest walk, ties by sorted vertex ids."""
    faces = trace_faces(e)
    if not faces[0].boundary:
        return e.with_outer(None)
    best = min(faces, key=lambda f: (-f.walk_length, f.key()))
    return e.with_outer(min(best.boundary))


def planar_embed(g: Graph) -> RotationEmbedding:
    """Deterministic planar embedding of a connected graph.

    Raises :class:`Nonplanar` with a Kuratowski subgraph otherwise.
    """
    if not is_connected(g):
        raise ValueError("planar_embed requires a connected graph")
    ok, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
    if not ok:
        raise Nonplanar(sorted(_norm(u, v) for u, v in cert.edges()))
    # networkx reports clockwise order; reversing keeps the ccw convention
    rotation = tuple(tuple(reversed(list(cert.neighbors_cw_order(v)))) if g.adj[v] else ()
                     for v in range(g.n))
    return select_outer(RotationEmbedding(g, rotation, None))


def embedding_from_rotation(g: Graph, rotation, outer: Dart | None = None) -> RotationEmbedding:
    rot = tuple(tuple(r) for r in rotation)
    for v in range(g.n):
        if set(rot[v]) != set(g.adj[v]) or len(rot[v]) != len(g.adj[v]):
            raise ValueError(f"rotation at {v} does not match adjacency")
    e = RotationEmbedding(g, rot, outer)
    return e if outer is not None else select_outer(e)


def euler_ok(e: RotationEmbedding) -> bool:
    g = e.graph
    faces = trace_faces(e)
    return g.n - g.m + len(faces) == 2 and sum(f.walk_length for f in faces) == 2 * g.m


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cycles as sorted triples.

    Edges are directed from lower to higher (degree, id) rank so each vertex
    scans only its forward neighbours; O(m * arboricity).
    """
    rank = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    pos = {v: i for i, v in enumerate(rank)}
    fwd = [set(w for w in g.adj[v] if pos[w] > pos[v]) for v in range(g.n)]
    out = []
    for u in range(g.n):
        for v in fwd[u]:
            for w in fwd[u] & fwd[v]:
                out.append(tuple(sorted((u, v, w))))
    return sorted(out)


def separating_triangles(g: Graph) -> set[tuple[int, int, int]]:
    result = set()
    for t in triangles(g):
        if len(components(g.n, g.adj, set(t))) >= 2:
            result.add(t)
    return result


def is_k_connected(g: Graph, k: int) -> bool:
    """Literal reading: deleting any ``k-1`` or fewer vertices leaves a connected rest.

    There is no ``n > k`` requirement, so K4 counts as 4-connected.  Brute
    force over vertex subsets; meant for small graphs.
    """
    if not is_connected(g):
        return False
    for size in range(1, k):
        for cut in combinations(range(g.n), size):
            if len(components(g.n, g.adj, set(cut))) >= 2:
                return False
    return True


def dual_graph(g: Graph, e: RotationEmbedding) -> tuple[Graph, list[FaceWalk]]:
    """Planar dual of a triangulation; dual vertex ``i`` is ``faces[i]``."""
    faces = trace_faces(e)
    if any(f.walk_length != 3 for f in faces):
        raise NotTriangulation("every face walk must have length 3")
    owner = {}
    for i, f in enumerate(faces):
        for d in f.boundary:
            owner[d] = i
    es = set()
    for u, v in g.edges:
        a, b = owner[(u, v)], owner[(v, u)]
        es.add(_norm(a, b))
    return Graph(len(faces), es), faces


def _bridges(n: int, adj: list[list[int]], skip: set[tuple[int, int]]) -> list[tuple[int, int]]:
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if _norm(v, w) in skip:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append(_norm(parent, v))
    return out


def _all_cyclic(n: int, adj, cut: set[tuple[int, int]]) -> bool:
    """True when removing ``cut`` leaves >= 2 components, each with a cycle."""
    seen = [False] * n
    ncomp = 0
    for s in range(n):
        if seen[s]:
            continue
        ncomp += 1
        seen[s] = True
        stack = [s]
        nv, deg_sum = 0, 0
        while stack:
            u = stack.pop()
            nv += 1
            for w in adj[u]:
                if _norm(u, w) in cut:
                    continue
                deg_sum += 1
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if deg_sum // 2 < nv:
            return False
    return ncomp >= 2


def is_cyclically_4_edge_connected(g: Graph) -> bool:
    """No cut of at most three edges leaves only cyclic components.

    Test-scale: every pair of edges is removed and the bridges of what
    remains complete the candidate cuts, O(m^3) overall.
    """
    adj = [sorted(a) for a in g.adj]
    edges = g.sorted_edges()
    if _all_cyclic(g.n, adj, set()):
        return False
    for e in edges:
        if _all_cyclic(g.n, adj, {e}):
            return False
    for e1, e2 in combinations(edges, 2):
        skip = {e1, e2}
        if _all_cyclic(g.n, adj, skip):
            return False
        for b in _bridges(g.n, adj, skip):
            if _all_cyclic(g.n, adj, skip | {b}):
                return False
    return True
