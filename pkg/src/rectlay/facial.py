"""Search for a planar embedding in which every triangle bounds a face.

A connected planar graph on four or more vertices has an embedding without
filled triangles exactly when it has one where every 3-cycle is facial and
some face is not a triangle.  The search works block by block:

* a block that shares a cut vertex ``v`` with other blocks needs a face at
  ``v`` that is not a triangle, unless the block is a single triangle;
* inside a block, a separation pair ``{a, b}`` splits it into components,
  each closed with a virtual edge ``ab``.  When ``ab`` is a real edge, a
  component holding a common neighbour ``c`` of ``a`` and ``b`` must show the
  face ``a c b`` to that edge.  Only two components fit next to the edge, and
  each can show only one such face;
* a block without separation pairs is 3-connected and its embedding is fixed
  up to a mirror image, so the checks are direct.

Every failure is reported as a triangle whose removal disconnects the graph.
"""

from __future__ import annotations

import networkx as nx

REAL, BACKED, LOOSE = "real", "backed", "loose"  # BACKED: virtual, the real edge exists


class Obstruction(Exception):
    def __init__(self, triple):
        super().__init__(f"triangle {triple} is filled in every embedding")
        self.triple = tuple(sorted(triple))


def _key(u, v):
    return (u, v) if u < v else (v, u)


def _prev(rot, v, u):
    r = rot[v]
    return r[r.index(u) - 1]


def _faces(rot):
    seen = set()
    out = []
    for u in rot:
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d[0])
                d = (d[1], _prev(rot, d[1], d[0]))
            out.append(walk)
    return out


def _mirror(rot):
    return {v: list(reversed(r)) for v, r in rot.items()}


def _relevant(edges, u, v):
    return edges.get(_key(u, v)) in (REAL, BACKED)


def _separation_pair(verts, edges):
    h = nx.Graph(list(edges))
    for a in sorted(verts):
        sub = h.subgraph(v for v in verts if v != a)
        cuts = sorted(nx.articulation_points(sub))
        if cuts:
            return a, cuts[0]
    return None


def _solve_leaf(verts, edges, needy):
    h = nx.Graph(list(edges))
    ok, cert = nx.check_planarity(h)
    if not ok:
        raise ValueError("split component is not planar")
    rot = {v: list(reversed(list(cert.neighbors_cw_order(v)))) for v in verts}
    tri_faces = set()
    for f in _faces(rot):
        if len(f) == 3 and all(_relevant(edges, f[i - 1], f[i]) for i in range(3)):
            tri_faces.add(frozenset(f))
    adj = {v: set() for v in verts}
    for u, v in edges:
        if edges[(u, v)] != LOOSE:
            adj[u].add(v)
            adj[v].add(u)
    for u in sorted(verts):
        for v in sorted(adj[u]):
            if v < u:
                continue
            for w in sorted(adj[u] & adj[v]):
                if w > v and frozenset((u, v, w)) not in tri_faces:
                    raise Obstruction((u, v, w))
    for v in sorted(needy):
        faces_at_v = [f for f in _faces(rot) if v in f]
        if all(frozenset(f) in tri_faces and len(f) == 3 for f in faces_at_v):
            raise Obstruction(tuple(min(faces_at_v, key=sorted)))
    return rot


def _seq(rot, a, b):
    r = rot[a]
    i = r.index(b)
    return r[i + 1:] + r[:i]


def _solve(verts, edges, needy):
    if len(verts) == 3:
        a, b, c = sorted(verts)
        return {a: [b, c], b: [c, a], c: [a, b]}
    pair = _separation_pair(verts, edges)
    if pair is None:
        return _solve_leaf(verts, edges, needy)
    a, b = pair
    real = _key(a, b) in edges
    rest = [v for v in verts if v not in (a, b)]
    h = nx.Graph()
    h.add_nodes_from(rest)
    h.add_edges_from(e for e in edges if a not in e and b not in e)
    comps = sorted((sorted(c) for c in nx.connected_components(h)), key=lambda c: c[0])
    where = {v: i for i, c in enumerate(comps) for v in c}
    sub_edges = [{_key(a, b): BACKED if real else LOOSE} for _ in comps]
    for e, kind in edges.items():
        if e == _key(a, b):
            continue
        u, v = e
        sub_edges[where[v] if u in (a, b) else where[u]][e] = kind
    apex = [[c for c in comp if real and _relevant(edges, a, c) and _relevant(edges, b, c)]
            for comp in comps]
    for i, cs in enumerate(apex):
        if len(cs) >= 2:
            raise Obstruction((a, b, cs[0]))
    with_apex = [i for i, cs in enumerate(apex) if cs]
    if len(with_apex) > 2:
        raise Obstruction((a, b, apex[with_apex[0]][0]))
    rots = [_solve(set(comp) | {a, b}, sub_edges[i], set(comp) & needy)
            for i, comp in enumerate(comps)]
    order = [i for i in range(len(comps)) if i not in with_apex]
    if with_apex:
        first = with_apex[0]
        c = apex[first][0]
        if not (_prev(rots[first], b, a) == c and _prev(rots[first], c, b) == a):
            rots[first] = _mirror(rots[first])
        order.insert(0, first)
    if len(with_apex) == 2:
        last = with_apex[1]
        c = apex[last][0]
        if not (_prev(rots[last], a, b) == c and _prev(rots[last], c, a) == b):
            rots[last] = _mirror(rots[last])
        order.append(last)
    out = {}
    for i in order:
        for v in comps[i]:
            out[v] = rots[i][v]
    out[a] = ([b] if real else []) + [w for i in order for w in _seq(rots[i], a, b)]
    out[b] = ([a] if real else []) + [w for i in reversed(order) for w in _seq(rots[i], b, a)]
    return out


def _good_angle(rot, v, size):
    """Neighbours ``(y, x)`` of ``v``, ``y`` just before ``x``, around a face fit to host other blocks."""
    for f in sorted(_faces(rot), key=lambda f: (len(f) == 3, sorted(f))):
        if v not in f:
            continue
        if len(f) == 3 and size > 3:
            break
        i = f.index(v)
        x = f[i - 1]
        return _prev(rot, v, x), x
    return None


def facial_rotation(g) -> dict[int, list[int]]:
    """Ccw rotation system of a connected planar ``g`` with every triangle facial.

    Cut vertices also get a non-triangular face in each larger block.  Raises
    :class:`Obstruction` when no such embedding exists.
    """
    nxg = g.to_networkx()
    if g.n == 1:
        return {0: []}
    blocks = sorted((sorted(b) for b in nx.biconnected_components(nxg)), key=lambda b: b)
    cuts = set(nx.articulation_points(nxg))
    block_rot = []
    for blk in blocks:
        bs = set(blk)
        edges = {_key(u, v): REAL for u in blk for v in g.adj[u] if v in bs}
        if len(blk) == 2:
            u, v = blk
            block_rot.append({u: [v], v: [u]})
        else:
            block_rot.append(_solve(bs, edges, bs & cuts))
    # block-cut tree from the block of vertex 0
    owner = {}
    children: dict[int, list[int]] = {}
    seen = {0}
    queue = [next(i for i, b in enumerate(blocks) if 0 in b)]
    member = {}
    for i, blk in enumerate(blocks):
        for v in blk:
            member.setdefault(v, []).append(i)
    for i in queue:
        for v in blocks[i]:
            if v in owner:
                continue
            owner[v] = i
            for j in member[v]:
                if j not in seen and j != i:
                    seen.add(j)
                    children.setdefault(v, []).append(j)
                    queue.append(j)
        seen.add(i)
    rotation = {}
    for v, i in owner.items():
        r = list(block_rot[i][v])
        if v in children:
            y, x = _good_angle(block_rot[i], v, len(blocks[i]))
            ins = []
            for j in children[v]:
                cy, cx = _good_angle(block_rot[j], v, len(blocks[j]))
                cr = block_rot[j][v]
                k = cr.index(cx)
                ins.extend(cr[k:] + cr[:k])
            k = r.index(x)
            r = r[:k] + ins + r[k:]
        rotation[v] = r
    return rotation
