"""Rectangular duals through regular edge labelings.

The graph with the outer hub removed is wrapped in a four-vertex frame
(North, East, South, West).  A canonical ordering from the West/South base
edge drives the labeling; coordinates are longest paths in the duals of
the vertical and horizontal st-graphs.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass

from .augment import AugmentedGraph
from .graph import Graph, RotationEmbedding, trace_faces
from .layout import Layout, Rect

H, V = "h", "v"


class FramingFailure(ValueError):
    pass


class LabelingFailure(ValueError):
    pass


@dataclass(frozen=True)
class FramedGraph:
    graph: Graph
    embedding: RotationEmbedding
    frame: tuple[int, int, int, int]  # N, E, S, W
    interior: frozenset[int]
    # framed id -> id in the augmented graph (None for frame vertices)
    source_id: tuple[int | None, ...] = ()

    @property
    def north(self) -> int:
        return self.frame[0]

    @property
    def east(self) -> int:
        return self.frame[1]

    @property
    def south(self) -> int:
        return self.frame[2]

    @property
    def west(self) -> int:
        return self.frame[3]


@dataclass(frozen=True)
class EdgeLabeling:
    framed: FramedGraph
    # (tail, head) -> H or V; tail is left of / below head
    labels: dict

    def color(self, u: int, w: int) -> tuple[str, bool]:
        """Color of edge uw and whether it is directed u -> w."""
        if (u, w) in self.labels:
            return self.labels[(u, w)], True
        return self.labels[(w, u)], False


def frame_for_dual(a: AugmentedGraph, v: int) -> FramedGraph:
    """Delete ``v`` and attach a frame around the cycle of its former neighbours."""
    if v not in a.added_vertices:
        raise FramingFailure(f"vertex {v} was not added during augmentation")
    emb = a.embedding
    cycle = list(emb.rotation[v])
    k = len(cycle)
    if k < 4:
        raise FramingFailure(f"outer cycle has length {k}; need at least 4")
    cyc_set = set(cycle)
    for i, c in enumerate(cycle):
        nb = {cycle[i - 1], cycle[(i + 1) % k]}
        if any(w in cyc_set and w not in nb for w in emb.rotation[c]):
            raise FramingFailure(f"outer cycle has a chord at {c}")
    start = cycle.index(min(cycle))
    cycle = cycle[start:] + cycle[:start]
    # cycle runs clockwise around the interior: North arc, East, South, West
    cuts = [round(j * k / 4) for j in range(4)] + [k]
    keep = [u for u in range(a.graph.n) if u != v]
    new_id = {u: i for i, u in enumerate(keep)}
    base = len(keep)
    N, E, S, W = base, base + 1, base + 2, base + 3
    names = (N, E, S, W)
    arcs = []
    for j in range(4):
        arcs.append([new_id[cycle[i % k]] for i in range(cuts[j], cuts[j + 1] + 1)])
    rot: list[list[int]] = []
    for u in keep:
        if u in cyc_set:
            i = cycle.index(u)
            if i == 0:
                ins = [N, W]
            elif i in cuts[1:4]:
                j = cuts.index(i)
                ins = [names[j], names[j - 1]]
            else:
                ins = [names[max(j for j in range(4) if cuts[j] < i)]]
        out = []
        for w in emb.rotation[u]:
            if w == v:
                out.extend(ins)
            else:
                out.append(new_id[w])
        rot.append(out)
    rot.append([E, W] + arcs[0])
    rot.append([N] + arcs[1] + [S])
    rot.append([E] + arcs[2] + [W])
    rot.append([S] + arcs[3] + [N])
    edges = {(min(x, y), max(x, y)) for x in range(len(rot)) for y in rot[x]}
    g = Graph(len(rot), edges)
    e = RotationEmbedding(g, tuple(tuple(r) for r in rot), (N, E))
    source = tuple(keep) + (None,) * 4
    return FramedGraph(g, e, names, frozenset(range(base)), source)


def canonical_order(f: FramedGraph) -> tuple[list[int], dict[int, list[int]]]:
    """Canonical ordering W, S, ..., E, N of a framed 4-connected triangulation.

    Built by peeling from the top: a vertex of the current W..S boundary path
    may be removed when it has no chord to the path and at least two already
    removed neighbours.  Returns the order and, per non-base vertex, its lower
    neighbours listed from the West end of the path to the South end.
    """
    e = f.embedding
    N, E, S, W = f.frame
    path = [W, N, E, S]
    removed: set[int] = set()
    higher = [0] * f.graph.n
    peel: list[int] = []
    lower: dict[int, list[int]] = {}

    def remove(i: int) -> None:
        x = path[i]
        a, b = path[i - 1], path[i + 1]
        inner = []
        w = e.ccw_next(x, a)
        while w != b:
            inner.append(w)
            w = e.ccw_next(x, w)
        lower[x] = [a] + inner + [b]
        path[i:i + 1] = inner
        removed.add(x)
        peel.append(x)
        for w in e.graph.adj[x]:
            higher[w] += 1

    remove(1)  # North
    remove(path.index(E))
    while len(path) > 2:
        on_path = {u: i for i, u in enumerate(path)}
        pick = None
        for i in range(1, len(path) - 1):
            x = path[i]
            if higher[x] < 2:
                continue
            if any(w in on_path and abs(on_path[w] - i) > 1 for w in e.graph.adj[x]):
                continue
            if pick is None or x < path[pick]:
                pick = i
        if pick is None:
            raise LabelingFailure(f"canonical ordering stuck with boundary {path}")
        remove(pick)
    order = [W, S] + peel[::-1]
    return order, lower


def compute_rel(f: FramedGraph) -> EdgeLabeling:
    """Regular edge labeling: every interior edge gets an orientation and an axis.

    Walking a canonical ordering forward, a new vertex takes its West-most lower
    neighbour as horizontal, the South-most as vertical, and the covered middle
    neighbours split into a horizontal run followed by a vertical run; each
    covered vertex must end up with both an outgoing vertical and an outgoing
    horizontal edge.
    """
    N, E, S, W = f.frame
    frame = set(f.frame)
    order, lower = canonical_order(f)
    labels: dict[tuple[int, int], str] = {}
    has_out = {u: set() for u in range(f.graph.n)}
    for v in order[2:]:
        low = lower[v]
        inner = [u for u in low if u not in frame]
        if v == E:
            colors = {u: H for u in inner}
        elif v == N:
            colors = {u: V for u in inner}
        else:
            mids = low[1:-1]
            need = []
            for u in mids:
                if V not in has_out[u] and H not in has_out[u]:
                    need.append(None)
                elif V not in has_out[u]:
                    need.append(V)
                elif H not in has_out[u]:
                    need.append(H)
                else:
                    need.append(None)
            last_h = max((i for i, c in enumerate(need) if c == H), default=-1)
            if any(c == V for c in need[:last_h + 1]):
                raise LabelingFailure(f"no consistent split of lower neighbours of {v}")
            colors = {low[0]: H, low[-1]: V}
            for i, u in enumerate(mids):
                colors[u] = H if i <= last_h else V
        for u, c in colors.items():
            if u in frame and v in frame:
                continue
            labels[(u, v)] = c
            has_out[u].add(c)
    lab = EdgeLabeling(f, labels)
    problems = rel_problems(lab)
    if problems:
        raise LabelingFailure(problems[0])
    return lab


def _blocks(seq):
    out = []
    for s in seq:
        if not out or out[-1] != s:
            out.append(s)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def rel_problems(lab: EdgeLabeling) -> list[str]:
    """Audit the four-block rule and st-acyclicity of both colour classes."""
    f = lab.framed
    g, e = f.graph, f.embedding
    N, E, S, W = f.frame
    frame = set(f.frame)
    probs = []
    for u, w in g.edges:
        if u in frame and w in frame:
            continue
        if (u, w) not in lab.labels and (w, u) not in lab.labels:
            probs.append(f"edge {u}-{w} unlabeled")
    if probs:
        return probs
    ccw_expected = ["outN", "inW", "inS", "outE"]
    for u in sorted(f.interior):
        seq = []
        for w in e.rotation[u]:
            c, out = lab.color(u, w)
            seq.append(("out" if out else "in") + ("N" if c == V and out else "E" if out else
                                                   "S" if c == V else "W"))
        b = _blocks(seq)
        if len(b) != 4:
            probs.append(f"vertex {u}: {len(b)} blocks {b}")
            continue
        k = b.index("outN")
        if b[k:] + b[:k] != ccw_expected:
            probs.append(f"vertex {u}: block order {b}")
    for color, src, dst in ((V, S, N), (H, W, E)):
        indeg = defaultdict(int)
        succ = defaultdict(list)
        for (a, b), c in lab.labels.items():
            if c == color:
                succ[a].append(b)
                indeg[b] += 1
        queue = deque(u for u in list(succ) if indeg[u] == 0)
        seen = 0
        while queue:
            u = queue.popleft()
            seen += 1
            for w in succ[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        nodes = set(succ) | {b for (a, b), c in lab.labels.items() if c == color}
        if seen != len(nodes):
            probs.append(f"{color}-colored edges contain a cycle")
        heads = {b for (a, b), c in lab.labels.items() if c == color}
        sources = sorted(nodes - heads)
        if sources != [src]:
            probs.append(f"{color}-colored digraph sources {sources}, expected {src}")
    return probs


def _sub_rotation(f: FramedGraph, keep_edge) -> list[list[int]]:
    return [[w for w in f.embedding.rotation[u] if keep_edge(u, w)] for u in range(f.graph.n)]


def _face_ids(rot: list[list[int]]) -> dict[tuple[int, int], int]:
    """Face index of the face left of every dart of a rotation system."""
    pos = {}
    for u, r in enumerate(rot):
        for i, w in enumerate(r):
            pos[(u, w)] = i
    fid: dict[tuple[int, int], int] = {}
    nxt = 0
    for u, r in enumerate(rot):
        for w in r:
            if (u, w) in fid:
                continue
            d = (u, w)
            while d not in fid:
                fid[d] = nxt
                a, b = d
                rb = rot[b]
                d = (b, rb[pos[(b, a)] - 1])
            nxt += 1
    return fid


def _longest(n_nodes: int, arcs: list[tuple[int, int]], source: int) -> list[int]:
    succ = defaultdict(list)
    indeg = [0] * n_nodes
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    dist = [0] * n_nodes
    queue = deque(i for i in range(n_nodes) if indeg[i] == 0)
    seen = 0
    while queue:
        a = queue.popleft()
        seen += 1
        for b in succ[a]:
            dist[b] = max(dist[b], dist[a] + 1)
            indeg[b] -= 1
            if indeg[b] == 0:
                queue.append(b)
    if seen != n_nodes:
        raise LabelingFailure("dual digraph has a cycle")
    if dist[source] != 0:
        raise LabelingFailure("dual source is not minimal")
    return dist


def _axis(lab: EdgeLabeling, color: str):
    """Per-vertex [low, high) extent along one axis.

    ``color`` V gives x extents from the vertical st-graph, H gives y extents
    from the horizontal one.  Faces are crossed from the low side to the high
    side of every edge; the outer face is split in two at the frame.
    """
    f = lab.framed
    N, E, S, W = f.frame
    if color == V:
        frame_arcs = [(S, W), (W, N), (S, E), (E, N)]
        low_side = {(S, W), (W, N)}      # outer face lies west of these
        high_side = {(S, E), (E, N)}     # and east of these
    else:
        frame_arcs = [(W, S), (S, E), (W, N), (N, E)]
        low_side = {(W, S), (S, E)}      # outer face lies south
        high_side = {(W, N), (N, E)}
    arcs = [d for d, c in lab.labels.items() if c == color] + frame_arcs
    adj = {(a, b) for a, b in arcs} | {(b, a) for a, b in arcs}
    rot = _sub_rotation(f, lambda u, w: (u, w) in adj)
    fid = _face_ids(rot)
    nf = max(fid.values()) + 1
    lo_outer, hi_outer = nf, nf + 1
    sides = {}
    dual = []
    for a, b in arcs:
        left, right = fid[(a, b)], fid[(b, a)]
        # left of a northbound edge is west; left of an eastbound edge is north
        lo, hi = (left, right) if color == V else (right, left)
        if (a, b) in low_side:
            lo = lo_outer
        if (a, b) in high_side:
            hi = hi_outer
        sides[(a, b)] = (lo, hi)
        dual.append((lo, hi))
    dist = _longest(nf + 2, dual, lo_outer)
    ext = {}
    for (a, b), (lo, hi) in sides.items():
        for u in (a, b):
            l0, h0 = ext.get(u, (None, None))
            ext[u] = (dist[lo] if l0 is None else min(l0, dist[lo]),
                      dist[hi] if h0 is None else max(h0, dist[hi]))
    return ext


@dataclass(frozen=True)
class Dissection:
    layout: Layout
    framed: FramedGraph
    frame_rects: tuple[Rect, ...] = ()


def rel_to_dissection(lab: EdgeLabeling) -> Dissection:
    """Integer rectangular dual of the framed graph's interior vertices."""
    f = lab.framed
    xs = _axis(lab, V)
    ys = _axis(lab, H)
    rects = []
    for u in sorted(f.interior):
        (x0, x1), (y0, y1) = xs[u], ys[u]
        rects.append(Rect(u, x0, y0, x1 - x0, y1 - y0))
    frame = []
    for u in f.frame:
        (x0, x1), (y0, y1) = xs[u], ys[u]
        frame.append(Rect(u, x0, y0, x1 - x0, y1 - y0))
    return Dissection(Layout(tuple(rects)), f, tuple(frame))


def dissection_problems(d: Dissection) -> list[str]:
    """Exact audit: tiling, no four-way corners, adjacency equals the interior graph."""
    from .layout import contacts, interior_overlaps

    f = d.framed
    rects = d.layout.rects
    probs = []
    x0 = min(r.x for r in rects)
    y0 = min(r.y for r in rects)
    x1 = max(r.x2 for r in rects)
    y1 = max(r.y2 for r in rects)
    if sum(r.area for r in rects) != (x1 - x0) * (y1 - y0):
        probs.append("rectangle areas do not sum to the bounding box")
    if interior_overlaps(rects):
        probs.append("rectangles overlap")
    corners = defaultdict(int)
    for r in rects:
        for p in ((r.x, r.y), (r.x2, r.y), (r.x, r.y2), (r.x2, r.y2)):
            corners[p] += 1
    if any(c >= 4 for c in corners.values()):
        probs.append("four rectangles meet in a point")
    got = {(min(rects[a].id, rects[b].id), max(rects[a].id, rects[b].id)) for a, b in contacts(rects)}
    want = {(u, w) for u, w in f.graph.edges if u in f.interior and w in f.interior}
    if got != want:
        probs.append(f"adjacency mismatch: missing {sorted(want - got)[:5]}, extra {sorted(got - want)[:5]}")
    return probs


def rectangular_dual(a: AugmentedGraph, v: int | None = None) -> Dissection:
    """Dual of the augmented graph minus ``v``, with ids mapped back and re-based at the origin."""
    v = a.outer_vertex if v is None else v
    f = frame_for_dual(a, v)
    d = rel_to_dissection(compute_rel(f))
    src = f.source_id
    rects = tuple(Rect(src[r.id], r.x, r.y, r.w, r.h) for r in d.layout.rects)
    return Dissection(Layout(rects).normalized(), f, d.frame_rects)
