"""Decide whether a graph has a rectangular layout and find a usable embedding."""

from __future__ import annotations

from dataclasses import dataclass

from .facial import Obstruction, facial_rotation
from .graph import (
    Graph,
    Nonplanar,
    RotationEmbedding,
    embedding_from_rotation,
    is_connected,
    planar_embed,
    select_outer,
    separating_triangles,
    trace_faces,
    triangles,
)

NONPLANAR = "nonplanar"
SEPARATING_TRIANGLE = "separating-triangle"
TRIANGULATION = "triangulation"


@dataclass(frozen=True)
class FeasibilityVerdict:
    layoutable: bool
    witness_type: str | None = None
    witness: tuple = ()

    def __post_init__(self):
        if self.layoutable and self.witness_type is not None:
            raise ValueError("a layoutable verdict carries no witness")
        if not self.layoutable and self.witness_type is None:
            raise ValueError("a negative verdict needs a witness")

    def to_dict(self) -> dict:
        if self.witness_type is None:
            return {"layoutable": True, "witness": None}
        if self.witness_type == NONPLANAR:
            body = {"edges": [list(e) for e in self.witness]}
        elif self.witness_type == TRIANGULATION:
            body = {"edge_count": self.witness[0]}
        else:
            body = {"vertices": list(self.witness)}
        return {"layoutable": False, "witness": {"type": self.witness_type, **body}}


class NotLayoutable(ValueError):
    def __init__(self, verdict: FeasibilityVerdict):
        super().__init__(f"graph has no rectangular layout ({verdict.witness_type})")
        self.verdict = verdict


def filled_triangles(e: RotationEmbedding) -> set[tuple[int, int, int]]:
    """3-cycles with a vertex strictly inside (on the side away from the outer face)."""
    g = e.graph
    if e.outer is None:
        return set()
    face_id = {}
    for i, f in enumerate(trace_faces(e)):
        for d in f.boundary:
            face_id[d] = i
    outer = face_id[e.outer]
    out = set()
    for a, b, c in triangles(g):
        for cyc in ((a, b, c), (a, c, b)):
            verts, faces = _left_side(e, cyc, face_id)
            if outer not in faces:
                if verts:
                    out.add((a, b, c))
                break
    return out


def _left_side(e: RotationEmbedding, cyc, face_id) -> tuple[set[int], set[int]]:
    """Vertices and face ids strictly left of the directed 3-cycle ``cyc``."""
    tri = set(cyc)
    faces = set()
    inside: set[int] = set()
    for i in range(3):
        p, v, q = cyc[i - 1], cyc[i], cyc[(i + 1) % 3]
        faces.add(face_id[(v, q)])
        w = e.ccw_next(v, q)
        while w != p:
            faces.add(face_id[(v, w)])
            if w not in tri:
                inside.add(w)
            w = e.ccw_next(v, w)
    stack = list(inside)
    while stack:
        u = stack.pop()
        for w in e.graph.adj[u]:
            faces.add(face_id[(u, w)])
            if w not in tri and w not in inside:
                inside.add(w)
                stack.append(w)
    return inside, faces


def _search(g: Graph) -> RotationEmbedding | tuple[int, int, int]:
    """Embedding with no filled triangle, or a triangle that blocks every one.

    Graphs without separating triangles take the fast path: any embedding whose
    outer face is not a triangle works.  Otherwise the embedding search decides.
    """
    if not separating_triangles(g):
        return select_outer(planar_embed(g))
    try:
        rot = facial_rotation(g)
    except Obstruction as exc:
        return exc.triple
    e = embedding_from_rotation(g, [rot[v] for v in range(g.n)])
    if filled_triangles(e):
        raise RuntimeError("embedding search returned a filled triangle")
    return e


def is_layoutable(g: Graph) -> FeasibilityVerdict:
    """Layoutable iff planar with an embedding that leaves no triangle filled.

    A separating triangle is only an obstruction when the pieces it cuts off
    cannot all be drawn on one side of it; negative verdicts name such a triple.
    """
    if not is_connected(g):
        raise ValueError("is_layoutable requires a connected graph")
    try:
        planar_embed(g)
    except Nonplanar as exc:
        return FeasibilityVerdict(False, NONPLANAR, tuple(exc.witness))
    if g.n <= 3:
        return FeasibilityVerdict(True)
    found = _search(g)
    if isinstance(found, tuple):
        return FeasibilityVerdict(False, SEPARATING_TRIANGLE, found)
    if g.m >= 3 * g.n - 6:
        return FeasibilityVerdict(False, TRIANGULATION, (g.m,))
    return FeasibilityVerdict(True)


def embed_without_filled_triangles(g: Graph) -> RotationEmbedding:
    verdict = is_layoutable(g)
    if not verdict.layoutable:
        raise NotLayoutable(verdict)
    return _search(g)
