"""Integer rectangle layouts, contact extraction and validation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

STRONG, WEAK = "strong", "weak"


@dataclass(frozen=True)
class Rect:
    id: int | None  # None marks a gap
    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError(f"rectangle {self} must have positive width and height")

    @property
    def is_gap(self) -> bool:
        return self.id is None

    @property
    def x2(self) -> int:
        return self.x + self.w

    @property
    def y2(self) -> int:
        return self.y + self.h

    @property
    def area(self) -> int:
        return self.w * self.h

    def moved(self, dx: int, dy: int) -> "Rect":
        return Rect(self.id, self.x + dx, self.y + dy, self.w, self.h)

    def scaled(self, f: int) -> "Rect":
        return Rect(self.id, self.x * f, self.y * f, self.w * f, self.h * f)


@dataclass(frozen=True)
class Layout:
    rects: tuple[Rect, ...]
    mode: str = STRONG

    def __post_init__(self):
        object.__setattr__(self, "rects", tuple(self.rects))
        if self.mode not in (STRONG, WEAK):
            raise ValueError(f"unknown layout mode {self.mode!r}")

    @property
    def vertex_rects(self) -> list[Rect]:
        return [r for r in self.rects if not r.is_gap]

    @property
    def gaps(self) -> list[Rect]:
        return [r for r in self.rects if r.is_gap]

    def by_id(self) -> dict[int, Rect]:
        return {r.id: r for r in self.rects if not r.is_gap}

    def without(self, vid: int) -> "Layout":
        return Layout(tuple(r for r in self.rects if r.id != vid), self.mode)

    def scaled(self, f: int) -> "Layout":
        return Layout(tuple(r.scaled(f) for r in self.rects), self.mode)

    def normalized(self) -> "Layout":
        """Translate so the bounding box starts at the origin."""
        if not self.rects:
            return self
        x0 = min(r.x for r in self.rects)
        y0 = min(r.y for r in self.rects)
        return Layout(tuple(r.moved(-x0, -y0) for r in self.rects), self.mode)


def bbox(l: Layout) -> tuple[int, int]:
    if not l.rects:
        return (0, 0)
    return (max(r.x2 for r in l.rects) - min(r.x for r in l.rects),
            max(r.y2 for r in l.rects) - min(r.y for r in l.rects))


def area(l: Layout) -> int:
    w, h = bbox(l)
    return w * h


def _touching(a_list, b_list, lo, hi):
    """Pairs from two lists of disjoint intervals that overlap with positive length."""
    a_list = sorted(a_list, key=lambda t: lo(t))
    b_list = sorted(b_list, key=lambda t: lo(t))
    out = []
    i = j = 0
    while i < len(a_list) and j < len(b_list):
        a, b = a_list[i], b_list[j]
        if min(hi(a), hi(b)) > max(lo(a), lo(b)):
            out.append((a, b))
        if hi(a) < hi(b):
            i += 1
        else:
            j += 1
    return out


def contacts(rects) -> set[tuple[int, int]]:
    """Index pairs of rectangles whose boundaries share a segment of positive length.

    Assumes interior-disjoint input, so rectangles ending on one grid line
    have disjoint spans along it.
    """
    rects = list(rects)
    right, left = defaultdict(list), defaultdict(list)
    top, bottom = defaultdict(list), defaultdict(list)
    for i, r in enumerate(rects):
        right[r.x2].append(i)
        left[r.x].append(i)
        top[r.y2].append(i)
        bottom[r.y].append(i)
    out = set()
    for x, ids in right.items():
        if x in left:
            for a, b in _touching(ids, left[x], lambda i: rects[i].y, lambda i: rects[i].y2):
                out.add((min(a, b), max(a, b)))
    for y, ids in top.items():
        if y in bottom:
            for a, b in _touching(ids, bottom[y], lambda i: rects[i].x, lambda i: rects[i].x2):
                out.add((min(a, b), max(a, b)))
    return out


def corner_contacts(rects) -> set[tuple[int, int]]:
    """Index pairs that meet in exactly one point."""
    rects = list(rects)
    corners = defaultdict(list)
    for i, r in enumerate(rects):
        for p in ((r.x, r.y), (r.x2, r.y), (r.x, r.y2), (r.x2, r.y2)):
            corners[p].append(i)
    touching = contacts(rects)
    out = set()
    for ids in corners.values():
        for a in ids:
            for b in ids:
                if a < b and (a, b) not in touching:
                    ra, rb = rects[a], rects[b]
                    # meeting at a shared corner point, not along a segment
                    if (ra.x2 == rb.x or rb.x2 == ra.x) and (ra.y2 == rb.y or rb.y2 == ra.y):
                        out.add((a, b))
    return out


def interior_overlaps(rects, chunk: int = 2048) -> list[tuple[int, int]]:
    rects = list(rects)
    if len(rects) < 2:
        return []
    arr = np.array([(r.x, r.y, r.x2, r.y2) for r in rects], dtype=np.int64)
    out = []
    for s in range(0, len(rects), chunk):
        blk = arr[s:s + chunk]
        ox = (np.minimum(blk[:, None, 2], arr[None, :, 2]) > np.maximum(blk[:, None, 0], arr[None, :, 0]))
        oy = (np.minimum(blk[:, None, 3], arr[None, :, 3]) > np.maximum(blk[:, None, 1], arr[None, :, 1]))
        hit = np.argwhere(ox & oy)
        for a, b in hit:
            a = int(a) + s
            b = int(b)
            if a < b:
                out.append((a, b))
    return out


def contact_graph(l: Layout) -> Graph:
    """Graph on the vertex ids of ``l``; gaps are ignored."""
    rects = l.vertex_rects
    n = max((r.id for r in rects), default=-1) + 1
    es = {(min(rects[a].id, rects[b].id), max(rects[a].id, rects[b].id)) for a, b in contacts(rects)}
    return Graph(n, es)


@dataclass
class ValidationReport:
    ok: bool
    mode: str
    missing: list[tuple[int, int]] = field(default_factory=list)
    extra: list[tuple[int, int]] = field(default_factory=list)
    overlaps: list[tuple[int | None, int | None]] = field(default_factory=list)
    id_errors: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "mode": self.mode,
                "missing": [list(e) for e in self.missing],
                "extra": [list(e) for e in self.extra],
                "overlaps": [list(e) for e in self.overlaps],
                "id_errors": list(self.id_errors)}


def validate_layout(l: Layout, g: Graph, mode: str = STRONG) -> ValidationReport:
    rep = ValidationReport(True, mode)
    ids = [r.id for r in l.vertex_rects]
    if sorted(ids) != list(range(g.n)):
        seen = set(ids)
        rep.id_errors = [f"vertex {v} has no rectangle" for v in range(g.n) if v not in seen]
        rep.id_errors += [f"rectangle id {v} is not a vertex" for v in sorted(seen) if not 0 <= v < g.n]
        if len(seen) != len(ids):
            rep.id_errors.append("duplicate rectangle ids")
    rep.overlaps = [(l.rects[a].id, l.rects[b].id) for a, b in interior_overlaps(l.rects)]
    if rep.overlaps:
        rep.ok = False
        return rep
    rects = l.vertex_rects
    found = {(min(rects[a].id, rects[b].id), max(rects[a].id, rects[b].id))
             for a, b in contacts(rects)}
    rep.missing = sorted(e for e in g.edges if e not in found)
    if mode == STRONG:
        rep.extra = sorted(e for e in found if e not in g.edges)
    rep.ok = not (rep.missing or rep.extra or rep.id_errors)
    return rep
