"""Generators for ladders, accordions, the hardness gadget, lower-bound trees and random inputs."""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from .feasibility import is_layoutable
from .graph import Graph
from .trees import InvalidParameters, RootedTree, complete_tree

DEFAULT_SEED = 20240601


def harness_seed() -> int:
    """Seed for randomized sampling; ``RECTLAY_SEED`` overrides the default."""
    return int(os.environ.get("RECTLAY_SEED", DEFAULT_SEED))


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: set[tuple[int, int]] = set()
        self.tags: dict[int, str] = {}

    def vertex(self, tag: str) -> int:
        self.tags[self.n] = tag
        self.n += 1
        return self.n - 1

    def edge(self, a: int, b: int) -> None:
        self.edges.add((min(a, b), max(a, b)))

    def path(self, vs) -> None:
        for a, b in zip(vs, vs[1:]):
            self.edge(a, b)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _ladder(b: _Builder, left: int, right: int, rungs: list[int], subdivide: int, tag: str,
            skip: int | None = None) -> None:
    for x in rungs:
        b.edge(left, x)
        b.edge(x, right)
    for k, (x, y) in enumerate(zip(rungs, rungs[1:])):
        if k == skip:
            continue
        mids = [b.vertex(f"{tag}:path{k + 1}") for _ in range(subdivide)]
        b.path([x, *mids, y])


def gen_ladder(n: int, subdivide: int = 0) -> Graph:
    """``n``-rung ladder: ``L=0``, ``R=1``, rungs ``2..n+1``.

    ``subdivide`` extra vertices go on every path between consecutive rungs.
    """
    if n < 1:
        raise InvalidParameters("a ladder needs at least one rung")
    b = _Builder()
    left, right = b.vertex("strut:L"), b.vertex("strut:R")
    rungs = [b.vertex(f"rung:{i}") for i in range(1, n + 1)]
    _ladder(b, left, right, rungs, subdivide, "rung")
    return b.graph()


def gen_ij_ladder(i: int, j: int, subdivide: int = 0) -> Graph:
    """External ``i``-rung ladder plus an internal ``j``-rung ladder between its middle rungs.

    Ids: ``L=0``, ``R=1``, external rungs ``2..i+1``, internal rungs ``i+2..i+j+1``.
    The two middle rungs are joined only through the internal ladder, so the
    graph has exactly ``i + j + 2`` vertices when ``subdivide`` is 0.
    """
    if i < 2 or j < 1:
        raise InvalidParameters("need i >= 2 and j >= 1")
    b = _Builder()
    left, right = b.vertex("strut:L"), b.vertex("strut:R")
    xs = [b.vertex(f"rung:{k}") for k in range(1, i + 1)]
    ys = [b.vertex(f"inner:{k}") for k in range(1, j + 1)]
    _ladder(b, left, right, xs, subdivide, "rung", skip=i // 2 - 1)
    _ladder(b, xs[i // 2 - 1], xs[i // 2], ys, subdivide, "inner")
    return b.graph()


def _accordion(b: _Builder, n: int, tag: str, top: int | None = None, bottom: int | None = None):
    paths = [[b.vertex(f"{tag}:path{p}") for _ in range(n)] for p in (1, 2, 3)]
    x, y = b.vertex(f"{tag}:x"), b.vertex(f"{tag}:y")
    for p in paths:
        b.path(p)
    for v in paths[0] + paths[1]:
        b.edge(x, v)
    for v in paths[1] + paths[2]:
        b.edge(y, v)
    if top is not None:
        for v in paths[0]:
            b.edge(top, v)
    if bottom is not None:
        for v in paths[2]:
            b.edge(bottom, v)


def gen_accordion(n: int, enclosed: bool = False) -> Graph:
    """Three ``n``-vertex paths with ``x`` on the first two and ``y`` on the last two.

    Path vertices come first (``0..3n-1``), then ``x`` and ``y``; the enclosing
    ``T`` and ``B`` follow when ``enclosed``.
    """
    if n < 1:
        raise InvalidParameters("an accordion needs n >= 1")
    b = _Builder()
    _accordion(b, n, "acc")
    if enclosed:
        t, bot = b.vertex("enclose:T"), b.vertex("enclose:B")
        for v in range(n):
            b.edge(t, v)
            b.edge(bot, 2 * n + v)
    return b.graph()


class UnbalancedInstance(ValueError):
    pass


@dataclass(frozen=True)
class NMTSInstance:
    """Numerical matching with target sums; the sizes must add up to the targets."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        for name in ("X", "Y", "B"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not (len(self.X) == len(self.Y) == len(self.B)) or not self.B:
            raise ValueError("X, Y and B must have the same positive length")
        if min(self.X + self.Y + self.B) < 1:
            raise ValueError("sizes and targets must be positive")
        if sum(self.X) + sum(self.Y) != sum(self.B):
            raise UnbalancedInstance(f"sum of sizes {sum(self.X) + sum(self.Y)} != sum of targets {sum(self.B)}")

    @property
    def m(self) -> int:
        return len(self.B)

    @property
    def B_star(self) -> int:
        return max(self.B)

    @property
    def deltas(self) -> tuple[int, ...]:
        return tuple(2 * self.B_star - b for b in self.B)

    def scaled(self, f: int) -> "NMTSInstance":
        return NMTSInstance(tuple(f * v for v in self.X), tuple(f * v for v in self.Y),
                            tuple(f * v for v in self.B))


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    instance: NMTSInstance
    annotations: dict[int, str]
    target_w: int
    target_h: int


def gen_np_gadget(inst: NMTSInstance, scale_small: bool = False) -> Gadget:
    """Hardness gadget whose optimal layouts encode solutions of ``inst``.

    With ``scale_small`` every size is tripled first when some gap width
    ``2B* - B_i`` is below 3.
    """
    if scale_small and min(inst.deltas) < 3:
        inst = inst.scaled(3)
    b = _Builder()
    X, Y = b.vertex("X"), b.vertex("Y")
    t, bot, gstar = b.vertex("t"), b.vertex("b"), b.vertex("g*")
    g = [b.vertex(f"g{i}") for i in range(inst.m + 1)]
    for hub in (X, Y):
        for v in (t, bot, gstar, *g):
            b.edge(hub, v)
    b.edge(t, g[0])
    b.edge(bot, gstar)
    for i in range(1, inst.m + 1):
        _accordion(b, inst.deltas[i - 1], f"A{i}", g[i - 1], g[i])
    _accordion(b, 2 * inst.B_star + 2, "A*", g[inst.m], gstar)
    for i in range(1, inst.m + 1):
        for hub, size, name in ((X, inst.X[i - 1], "R"), (Y, inst.Y[i - 1], "S")):
            left, right = b.vertex(f"{name}{i}:L"), b.vertex(f"{name}{i}:R")
            rungs = [b.vertex(f"{name}{i}:rung{k}") for k in range(1, size + 1)]
            _ladder(b, left, right, rungs, 0, f"{name}{i}")
            b.edge(hub, left)
            b.edge(hub, right)
    return Gadget(b.graph(), inst, dict(b.tags), 2 * inst.B_star + 6, 6 * inst.m + 9)


def gen_complete_binary(i: int) -> RootedTree:
    """Complete binary tree on ``2**i`` leaves."""
    if i < 0:
        raise InvalidParameters("i must be non-negative")
    return complete_tree(2, i)


def gen_star_tree(n: int) -> RootedTree:
    """Complete binary tree on ``k = log2 n`` levels, its root linked to the centre of an ``n``-leaf star."""
    if n < 1 or n & (n - 1):
        raise InvalidParameters("n must be a power of two")
    k = n.bit_length() - 1
    t = complete_tree(2, k)
    centre = t.n
    parent = list(t.parent) + [0] + [centre] * n
    return RootedTree(tuple(parent), 0)


def trivial_lower_bound(g: Graph) -> int:
    """Area lower bound from vertex count and per-vertex perimeter demands."""
    degs = [g.degree(v) for v in range(g.n)]
    return max(g.n,
               sum(math.ceil(d / 4) for d in degs),
               sum(max(0, math.ceil((d - 2) / 2)) for d in degs))


# --- random inputs -------------------------------------------------------

def random_planar_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    """Connected subgraph of a random Delaunay triangulation."""
    if n < 3:
        return Graph(n, [(v - 1, v) for v in range(1, n)])
    pts = np.random.default_rng(rng.randrange(1 << 31)).random((n, 2))
    es = set()
    for s in Delaunay(pts).simplices:
        for a in range(3):
            u, v = int(s[a]), int(s[(a + 1) % 3])
            es.add((min(u, v), max(u, v)))
    full = nx.Graph(sorted(es))
    kept = {tuple(sorted(e)) for e in nx.minimum_spanning_edges(full, data=False)}
    kept |= {e for e in sorted(es) if rng.random() < density}
    return Graph(n, kept)


def random_layoutable_graph(n: int, rng: random.Random, density: float | None = None,
                            tries: int = 200) -> Graph:
    for _ in range(tries):
        d = rng.uniform(0.0, 0.6) if density is None else density
        g = random_planar_graph(n, rng, d)
        if is_layoutable(g).layoutable:
            return g
    raise RuntimeError(f"no layoutable graph on {n} vertices after {tries} tries")


def random_tree(n: int, rng: random.Random) -> RootedTree:
    """Random recursive tree, with occasional long paths mixed in."""
    parent = [-1]
    for v in range(1, n):
        parent.append(v - 1 if rng.random() < 0.3 else rng.randrange(v))
    return RootedTree(tuple(parent), 0)


def contact_kind(a, b) -> str:
    """``nested`` when one shared side lies within the other, else ``shear``."""
    if a.x2 == b.x or b.x2 == a.x:
        lo, hi = (a.y, a.y2), (b.y, b.y2)
    else:
        lo, hi = (a.x, a.x2), (b.x, b.x2)
    inside = (lo[0] >= hi[0] and lo[1] <= hi[1]) or (hi[0] >= lo[0] and hi[1] <= lo[1])
    return "nested" if inside else "shear"


def plant_violations(l, g: Graph, k: int, rng: random.Random, kind: str | None = None):
    """Drop up to ``k`` realized edges from ``g`` so ``l`` becomes a weak layout with false contacts.

    ``kind`` restricts the dropped contacts to ``nested`` or ``shear``.
    Returns the reduced graph and the dropped edges.
    """
    from .layout import contacts
    rects = l.vertex_rects
    pool = []
    for a, b in sorted(contacts(rects)):
        ra, rb = rects[a], rects[b]
        if kind is None or contact_kind(ra, rb) == kind:
            pool.append((min(ra.id, rb.id), max(ra.id, rb.id)))
    dropped = set(rng.sample(pool, min(k, len(pool))))
    return Graph(g.n, [e for e in g.edges if e not in dropped]), sorted(dropped)
