"""End-to-end layouts for general graphs, plus weak-to-strong repair."""

from __future__ import annotations

from .augment import augment_to_4ct
from .feasibility import NotLayoutable, embed_without_filled_triangles, is_layoutable
from .graph import Graph, is_connected
from .layout import (
    STRONG,
    WEAK,
    Layout,
    Rect,
    contact_graph,
    contacts,
    corner_contacts,
    validate_layout,
)
from .rectdual import Dissection, rectangular_dual


class NotWeakLayout(ValueError):
    def __init__(self, missing):
        super().__init__(f"layout misses edges {missing[:5]}")
        self.missing = missing


def _small_layout(g: Graph) -> Layout:
    if g.n == 0:
        return Layout(())
    if g.n == 1:
        return Layout((Rect(0, 0, 0, 1, 1),))
    if g.n == 2:
        return Layout((Rect(0, 0, 0, 1, 1), Rect(1, 1, 0, 1, 1)))
    if g.m == 3:
        return Layout((Rect(0, 0, 0, 2, 1), Rect(1, 0, 1, 1, 1), Rect(2, 1, 1, 1, 1)))
    # a path: the middle vertex sits between its two neighbours
    mid = next(v for v in range(3) if g.degree(v) == 2)
    ends = [v for v in range(3) if v != mid]
    return Layout((Rect(ends[0], 0, 0, 1, 1), Rect(mid, 1, 0, 1, 1), Rect(ends[1], 2, 0, 1, 1)))


def gapify(d: Dissection, added) -> Layout:
    """Turn the rectangles of augmentation vertices into gaps."""
    added = set(added)
    rects = tuple(Rect(None, r.x, r.y, r.w, r.h) if r.id in added else r for r in d.layout.rects)
    return Layout(rects, STRONG)


def layout_graph(g: Graph) -> Layout:
    """Strong integer layout of ``g`` via augmentation and a rectangular dual."""
    if not is_connected(g):
        raise ValueError("layout_graph requires a connected graph")
    if g.n <= 3:
        return _small_layout(g)
    verdict = is_layoutable(g)
    if not verdict.layoutable:
        raise NotLayoutable(verdict)
    aug = augment_to_4ct(embed_without_filled_triangles(g))
    return gapify(rectangular_dual(aug), aug.added_vertices)


# --- weak -> strong ------------------------------------------------------

def _flip_x(r: Rect) -> Rect:
    return Rect(r.id, -r.x2, r.y, r.w, r.h)


def _flip_y(r: Rect) -> Rect:
    return Rect(r.id, r.x, -r.y2, r.w, r.h)


def _transpose(r: Rect) -> Rect:
    return Rect(r.id, r.y, r.x, r.h, r.w)


def _min_feature(rects) -> int:
    """Smallest side length or positive boundary overlap."""
    best = min(min(r.w, r.h) for r in rects)
    for a, b in contacts(rects):
        ra, rb = rects[a], rects[b]
        if ra.x2 == rb.x or rb.x2 == ra.x:
            ov = min(ra.y2, rb.y2) - max(ra.y, rb.y)
        else:
            ov = min(ra.x2, rb.x2) - max(ra.x, rb.x)
        best = min(best, ov)
    return best


def _fix_canonical(rects: list[Rect], ia: int, ib: int, eps: int) -> None:
    """Separate ``a`` (above) from ``b`` (below) where ``a`` is nested or overhangs right."""
    a, b = rects[ia], rects[ib]
    y0 = a.y
    if a.x >= b.x and a.x2 <= b.x2:
        rects[ia] = Rect(a.id, a.x, a.y + eps, a.w, a.h - eps)
        return
    # a overhangs b on the right: shear the line y0 from b's right end up to a blocker
    x_start = b.x2
    x_stop = max(r.x2 for r in rects)
    for r in rects:
        if r.y < y0 < r.y2 and r.x >= x_start:
            x_stop = min(x_stop, r.x)
    for i, r in enumerate(rects):
        if i == ia:
            rects[i] = Rect(r.id, r.x, r.y + eps, r.w, r.h - eps)
        elif r.y == y0 and r.x < x_stop and r.x2 > x_start:
            rects[i] = Rect(r.id, r.x, r.y + eps, r.w, r.h - eps)
        elif r.y2 == y0 and r.x < x_stop and r.x2 > x_start:
            rects[i] = Rect(r.id, r.x, r.y, r.w, r.h + eps)


def _fix_violation(rects: list[Rect], ia: int, ib: int) -> list[Rect]:
    """Remove the contact between rects ``ia`` and ``ib``; returns new rect list."""
    ops = []
    cur = list(rects)

    def apply(op):
        nonlocal cur
        cur = [op(r) for r in cur]
        ops.append(op)

    a, b = cur[ia], cur[ib]
    if a.x2 == b.x or b.x2 == a.x:
        apply(_transpose)
        a, b = cur[ia], cur[ib]
    if a.y2 == b.y:  # a below b: flip so a is on top
        apply(_flip_y)
        a, b = cur[ia], cur[ib]
    top, bot = ia, ib
    if b.x >= a.x and b.x2 <= a.x2 and not (a.x >= b.x and a.x2 <= b.x2):
        # bottom boundary nested in the top one: mirror vertically so the nested one is on top
        apply(_flip_y)
        top, bot = ib, ia
    a, b = cur[top], cur[bot]
    if not (a.x >= b.x and a.x2 <= b.x2) and a.x < b.x:
        apply(_flip_x)
    _fix_canonical(cur, top, bot, 1)
    for op in reversed(ops):
        cur = [op(r) for r in cur]
    return cur


def strengthen(l: Layout, g: Graph) -> Layout:
    """Weak layout of ``g`` to a strong one by separating every false contact.

    Gaps are dropped.  Coordinates are doubled whenever a side or an overlap
    is shorter than 2, so a unit move never closes another contact; the area
    can grow exponentially in the number of violations.
    """
    rects = [r for r in l.rects if not r.is_gap]
    rep = validate_layout(Layout(rects, WEAK), g, WEAK)
    if rep.overlaps or rep.id_errors:
        raise ValueError(f"not a valid layout of the graph: {rep.to_dict()}")
    if rep.missing:
        raise NotWeakLayout(rep.missing)
    rects = [r.scaled(2) for r in rects]
    while True:
        bad = sorted(
            (min(rects[a].id, rects[b].id), max(rects[a].id, rects[b].id), a, b)
            for a, b in contacts(rects)
            if not g.has_edge(rects[a].id, rects[b].id)
        )
        if not bad:
            return Layout(tuple(rects), STRONG)
        if _min_feature(rects) < 2:
            rects = [r.scaled(2) for r in rects]
        _, _, ia, ib = bad[0]
        rects = _fix_violation(rects, ia, ib)


def _shrink_pass(rects: list[Rect], g: Graph) -> list[Rect]:
    """Double, then pull in every top/right side none of whose contacts is an edge."""
    rects = [r.scaled(2) for r in rects]
    right_ok = [False] * len(rects)
    top_ok = [False] * len(rects)
    for a, b in contacts(rects):
        ra, rb = rects[a], rects[b]
        edge = ra.id is not None and rb.id is not None and g.has_edge(ra.id, rb.id)
        if not edge:
            continue
        if ra.x2 == rb.x:
            right_ok[a] = True
        elif rb.x2 == ra.x:
            right_ok[b] = True
        elif ra.y2 == rb.y:
            top_ok[a] = True
        else:
            top_ok[b] = True
    out = []
    for i, r in enumerate(rects):
        w = r.w if right_ok[i] else r.w - 1
        h = r.h if top_ok[i] else r.h - 1
        out.append(Rect(r.id, r.x, r.y, w, h))
    return out


def _extend_corner(rects: list[Rect], ia: int, ib: int) -> list[Rect]:
    """Turn a corner meeting into a unit side contact by shearing a horizontal line."""
    a, b = rects[ia], rects[ib]
    ops = []
    cur = list(rects)

    def apply(op):
        nonlocal cur
        cur = [op(r) for r in cur]
        ops.append(op)

    if a.y2 != b.y:  # make a the lower one
        ia, ib = ib, ia
        a, b = b, a
    if a.x2 != b.x:  # make b the one to the right
        apply(_flip_x)
    a, b = cur[ia], cur[ib]
    # raise the top of a and everything along the line to its left until a blocker
    y0 = a.y2
    x_end = a.x2
    x_begin = min(r.x for r in cur)
    for r in cur:
        if r.y < y0 < r.y2 and r.x2 <= x_end:
            x_begin = max(x_begin, r.x2)
    for i, r in enumerate(cur):
        if r.y2 == y0 and r.x < x_end and r.x2 > x_begin:
            cur[i] = Rect(r.id, r.x, r.y, r.w, r.h + 1)
        elif r.y == y0 and r.x < x_end and r.x2 > x_begin:
            cur[i] = Rect(r.id, r.x, r.y + 1, r.w, r.h - 1)
    for op in reversed(ops):
        cur = [op(r) for r in cur]
    return cur


def remove_corner_contacts(l: Layout, g: Graph | None = None, max_rounds: int = 64) -> Layout:
    """Layout with no two rectangles meeting in a single point.

    ``g`` defaults to the contact graph of ``l``.  Coordinates are doubled and
    every top or right side that carries no edge of ``g`` is pulled in by one
    unit; contacts that are not edges of ``g`` disappear in the same pass.  Any
    corner meeting left over is opened into a unit contact and separated
    again with :func:`strengthen`.  Gaps are dropped.
    """
    if g is None:
        g = contact_graph(l)
    rects = _shrink_pass([r for r in l.rects if not r.is_gap], g)
    for _ in range(max_rounds):
        corners = sorted(
            (min(rects[a].id, rects[b].id), max(rects[a].id, rects[b].id), a, b)
            for a, b in corner_contacts(rects)
        )
        if not corners:
            break
        _, _, ia, ib = corners[0]
        rects = [r.scaled(2) for r in rects]
        rects = _extend_corner(rects, ia, ib)
        rects = list(strengthen(Layout(tuple(rects), WEAK), g).rects)
    else:
        raise RuntimeError("corner contacts persisted")
    mode = STRONG if validate_layout(Layout(tuple(rects)), g).ok else WEAK
    return Layout(tuple(rects), mode)
