"""Tree layouts: the descendant-width algorithm, heavy paths, complete k-ary trees."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .layout import STRONG, WEAK, Layout, Rect, area
from .pipeline import remove_corner_contacts


class PartitionMismatch(ValueError):
    pass


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree on vertices ``0..n-1``; ``parent[root]`` is ``-1``."""

    parent: tuple[int, ...]
    root: int

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(self.parent))
        n = len(self.parent)
        if not 0 <= self.root < n or self.parent[self.root] != -1:
            raise ValueError("root must be a vertex with parent -1")
        kids = [[] for _ in range(n)]
        for v, p in enumerate(self.parent):
            if v == self.root:
                continue
            if not 0 <= p < n or p == v:
                raise ValueError(f"bad parent {p} for vertex {v}")
            kids[p].append(v)
        order = [self.root]
        for v in order:
            order.extend(kids[v])
        if len(order) != n:
            raise ValueError("parent map has a cycle or a second root")
        depth = [0] * n
        depth[self.root] = 1
        for v in order[1:]:
            depth[v] = depth[self.parent[v]] + 1
        desc = [1] * n
        for v in reversed(order[1:]):
            desc[self.parent[v]] += desc[v]
        object.__setattr__(self, "children", tuple(tuple(c) for c in kids))
        object.__setattr__(self, "order", tuple(order))
        object.__setattr__(self, "depths", tuple(depth))
        object.__setattr__(self, "desc", tuple(desc))

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def depth(self) -> int:
        return max(self.depths)

    @classmethod
    def from_graph(cls, g: Graph, root: int = 0) -> "RootedTree":
        if g.m != g.n - 1:
            raise ValueError("not a tree")
        parent = [-2] * g.n
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in sorted(g.adj[v]):
                if parent[w] == -2:
                    parent[w] = v
                    stack.append(w)
        if -2 in parent:
            raise ValueError("not a tree")
        return cls(tuple(parent), root)

    def to_graph(self) -> Graph:
        return Graph(self.n, [(p, v) for v, p in enumerate(self.parent) if p >= 0])


@dataclass(frozen=True)
class HeavyPathPartition:
    """Vertex-disjoint downward paths covering the tree, each listed top first."""

    paths: tuple[tuple[int, ...], ...]

    def top(self, i: int) -> int:
        return self.paths[i][0]


@dataclass(frozen=True)
class CompressedTree:
    parent: tuple[int, ...]  # per path index, -1 for the root path
    depth: int


def is_heavy(t: RootedTree, v: int) -> bool:
    p = t.parent[v]
    return p >= 0 and 2 * t.desc[v] > t.desc[p]


def heavy_path_partition(t: RootedTree) -> HeavyPathPartition:
    heavy_child = [-1] * t.n
    for v in t.order[1:]:
        if is_heavy(t, v):
            heavy_child[t.parent[v]] = v
    paths = []
    for v in t.order:
        if v == t.root or not is_heavy(t, v):
            path = [v]
            while heavy_child[path[-1]] >= 0:
                path.append(heavy_child[path[-1]])
            paths.append(tuple(path))
    return HeavyPathPartition(tuple(paths))


def trivial_partition(t: RootedTree) -> HeavyPathPartition:
    return HeavyPathPartition(tuple((v,) for v in t.order))


def _path_index(t: RootedTree, p: HeavyPathPartition) -> list[int]:
    where = [-1] * t.n
    for i, path in enumerate(p.paths):
        for a, b in zip(path, path[1:]):
            if t.parent[b] != a:
                raise PartitionMismatch(f"{a}->{b} is not a tree edge downward")
        for v in path:
            if not 0 <= v < t.n or where[v] != -1:
                raise PartitionMismatch(f"vertex {v} is out of range or on two paths")
            where[v] = i
    if -1 in where:
        raise PartitionMismatch(f"vertex {where.index(-1)} is on no path")
    return where


def compressed_tree(t: RootedTree, p: HeavyPathPartition) -> CompressedTree:
    where = _path_index(t, p)
    parent = [-1] * len(p.paths)
    for i, path in enumerate(p.paths):
        if path[0] != t.root:
            parent[i] = where[t.parent[path[0]]]
    depth = [0] * len(p.paths)
    for v in t.order:
        i = where[v]
        if depth[i] == 0:
            depth[i] = 1 if parent[i] < 0 else depth[parent[i]] + 1
    return CompressedTree(tuple(parent), max(depth))


def layout_tree_B(t: RootedTree, p: HeavyPathPartition) -> Layout:
    """Each path is a one-high strip; child paths hang below their attachment vertex.

    The result is a weak layout of width ``n`` and height ``depth(C(T))``:
    strips of sibling paths abut, and a strip touches every vertex above it.
    Use :func:`strong_tree_layout` for a strong one.
    """
    where = _path_index(t, p)
    cdepth = compressed_tree(t, p).depth
    rects: list[Rect] = []
    # (path index, x offset, row) with row 0 at the top
    stack = [(where[t.root], 0, 0)]
    while stack:
        i, x, row = stack.pop()
        path = p.paths[i]
        for j, u in enumerate(path):
            s = t.desc[u] - (t.desc[path[j + 1]] if j + 1 < len(path) else 0)
            rects.append(Rect(u, x, cdepth - 1 - row, s, 1))
            cx = x + 1  # the vertex's own unit sits left of its hanging strips
            for c in t.children[u]:
                if j + 1 < len(path) and c == path[j + 1]:
                    continue
                stack.append((where[c], cx, row + 1))
                cx += t.desc[c]
            x += s
    rects.sort(key=lambda r: r.id)
    return Layout(tuple(rects), WEAK)


def layout_tree_A(t: RootedTree) -> Layout:
    """Every vertex a one-high rectangle as wide as its subtree, children underneath."""
    return layout_tree_B(t, trivial_partition(t))


def strong_tree_layout(l: Layout, t: RootedTree) -> Layout:
    """Corner-free strong version of a tree layout at four times the area."""
    out = remove_corner_contacts(l, t.to_graph())
    if area(out) > 4 * area(l):
        raise RuntimeError("corner removal exceeded the 4x area budget")
    return out


# --- complete k-ary trees -------------------------------------------------

def complete_tree(k: int, c: int) -> RootedTree:
    """Complete ``k``-ary tree with ``k**c`` leaves in breadth-first numbering."""
    if k < 2 or c < 0:
        raise InvalidParameters("need k >= 2 and c >= 0")
    n = (k ** (c + 1) - 1) // (k - 1)
    return RootedTree(tuple(-1 if v == 0 else (v - 1) // k for v in range(n)), 0)


def alpha_of(m: int, l: int) -> Fraction:
    return 1 - Fraction(m, 2 * m + 2 * l)


def _rot_ccw(r: Rect, h: int) -> Rect:
    # (x, y) -> (h - y, x): the right side becomes the top, the top row the left column
    return Rect(r.id, h - r.y2, r.x, r.h, r.w)


def layout_complete_tree(k: int, c: int, m: int = 1, l: int = 0) -> Layout:
    """Strong layout of the complete ``k``-ary tree on ``k**c`` leaves.

    From the root down, levels come in blocks of ``2m`` type-1 levels (subtrees
    turned so their root meets the parent end-on) followed by ``2l`` type-2
    levels (subtrees hung upright).  Every subtree keeps one free column to
    its right.  ``alpha_of(m, l)`` is the targeted width exponent.
    """
    if k < 2 or c < 0 or m < 1 or l < 0:
        raise InvalidParameters("need k >= 2, c >= 0, m >= 1, l >= 0")
    period = 2 * m + 2 * l
    # template for the subtree at level t: rects tagged (local depth, position)
    tmpl = [((0, 0), Rect(0, 0, 0, 1, 1))]
    w, h = 1, 1
    for t in range(c - 1, -1, -1):
        type1 = t % period < 2 * m
        sw, sh = (h, w) if type1 else (w, h)
        nxt = []
        for q in range(k):
            x0 = q * (sw + 1)
            for (j, pos), r in tmpl:
                r2 = _rot_ccw(r, h) if type1 else r
                nxt.append(((j + 1, q * k ** j + pos), r2.moved(x0, 0)))
        w, h = k * (sw + 1), sh + 1
        nxt.append(((0, 0), Rect(0, 0, sh, w, 1)))
        tmpl = nxt
    first = [(k ** j - 1) // (k - 1) for j in range(c + 1)]
    rects = sorted((Rect(first[j] + pos, r.x, r.y, r.w, r.h) for (j, pos), r in tmpl),
                   key=lambda r: r.id)
    return Layout(tuple(rects), STRONG)


def complete_tree_dims(k: int, c: int, m: int = 1, l: int = 0) -> tuple[int, int]:
    """(height, width) predicted by the level recurrences, without building rects."""
    if k < 2 or c < 0 or m < 1 or l < 0:
        raise InvalidParameters("need k >= 2, c >= 0, m >= 1, l >= 0")
    period = 2 * m + 2 * l
    h, w = 1, 1
    for t in range(c - 1, -1, -1):
        if t % period < 2 * m:
            h, w = 1 + w, k * h + k
        else:
            h, w = 1 + h, k * w + k
    return h, w
