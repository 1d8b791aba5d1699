"""Exhaustive minimum-area search for tiny graphs, and extremal paths in layouts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph
from .layout import STRONG, Layout, Rect, contacts


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


@dataclass(frozen=True)
class OracleResult:
    min_area: int | None  # None: no layout fits the box
    witness: Layout | None
    max_w: int
    max_h: int
    exhausted: bool = True
    witnesses: tuple[Layout, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        from .io import layout_to_dict
        return {
            "min_area": self.min_area,
            "max_w": self.max_w,
            "max_h": self.max_h,
            "exhausted": self.exhausted,
            "witness": None if self.witness is None else layout_to_dict(self.witness),
        }


def _bfs_order(g: Graph) -> list[int]:
    order, seen = [], set()
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        q = deque([s])
        while q:
            v = q.popleft()
            order.append(v)
            for w in sorted(g.adj[v]):
                if w not in seen:
                    seen.add(w)
                    q.append(w)
    return order


def _touch(a, b) -> bool:
    ax, ay, ax2, ay2 = a
    bx, by, bx2, by2 = b
    if ax2 == bx or bx2 == ax:
        return min(ay2, by2) > max(ay, by)
    if ay2 == by or by2 == ay:
        return min(ax2, bx2) > max(ax, bx)
    return False


def _box_search(g: Graph, order, W: int, H: int, want_all: bool, counter: list[int], budget: int):
    cands = []
    for h in range(1, H + 1):
        for w in range(1, W + 1):
            for y in range(H - h + 1):
                for x in range(W - w + 1):
                    mask = 0
                    for yy in range(y, y + h):
                        mask |= ((1 << w) - 1) << (yy * W + x)
                    cands.append(((x, y, x + w, y + h), mask))
    cands.sort(key=lambda c: (c[0][1], c[0][0], c[0][3], c[0][2]))
    # orbit representatives for the first rectangle: centre in the lower-left
    # quadrant, and below the diagonal when the box is square
    first = [c for c in cands
             if c[0][0] + c[0][2] <= W and c[0][1] + c[0][3] <= H
             and (W != H or c[0][0] + c[0][2] <= c[0][1] + c[0][3])]
    placed: list = [None] * g.n
    found = []

    def rec(k, occ, free):
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded(budget)
        if k == len(order):
            found.append([placed[v] for v in range(g.n)])
            return not want_all
        if free < len(order) - k:
            return False
        v = order[k]
        before = order[:k]
        nbrs = [u for u in before if u in g.adj[v]]
        for box, mask in (first if k == 0 else cands):
            if occ & mask:
                continue
            if nbrs and not _touch(box, placed[nbrs[0]]):
                continue
            ok = True
            for u in before:
                if _touch(box, placed[u]) != (u in g.adj[v]):
                    ok = False
                    break
            if not ok:
                continue
            placed[v] = box
            if rec(k + 1, occ | mask, free - bin(mask).count("1")):
                return True
            placed[v] = None
        return False

    rec(0, 0, W * H)
    return found


def _to_layout(boxes) -> Layout:
    return Layout(tuple(Rect(v, x, y, x2 - x, y2 - y) for v, (x, y, x2, y2) in enumerate(boxes)), STRONG)


def brute_force_min_area(g: Graph, max_w: int = 6, max_h: int = 6, budget: int = 5_000_000,
                         all_witnesses: bool = False) -> OracleResult:
    """Exact minimum bounding-box area over strong layouts inside ``max_w x max_h``.

    Boxes are tried by increasing area, then by increasing longer side, so the
    first box holding a layout gives the minimum.  Corner meetings are not
    contacts.  With ``all_witnesses`` every layout at the minimum is collected
    (one per orbit of the first rectangle's position).
    """
    if g.n == 0:
        return OracleResult(0, Layout(()), max_w, max_h)
    order = _bfs_order(g)
    shapes = sorted(((w * h, max(w, h), w, h) for w in range(1, max_w + 1) for h in range(1, max_h + 1)))
    counter = [0]
    best, hits = None, []
    for a, _, w, h in shapes:
        if best is not None and a > best:
            break
        if a < g.n:
            continue
        res = _box_search(g, order, w, h, all_witnesses, counter, budget)
        # a layout inside a smaller box was already found at a smaller area
        res = [r for r in res if max(b[2] for b in r) == w and max(b[3] for b in r) == h]
        if res:
            best = a
            hits.extend(res)
            if not all_witnesses:
                break
    if best is None:
        return OracleResult(None, None, max_w, max_h)
    layouts = tuple(_to_layout(r) for r in hits)
    return OracleResult(best, layouts[0], max_w, max_h, True, layouts if all_witnesses else ())


# --- extremal paths -------------------------------------------------------

def extremal_path(l: Layout, ids, vertical: bool = True) -> list[int] | None:
    """Shortest contact path among rectangles ``ids`` joining opposite sides of their bounding box.

    Vertical paths join bottom and top, horizontal ones left and right.
    Returns the rectangle ids in order, or ``None`` if the sub-layout has none.
    """
    ids = set(ids)
    rects = [r for r in l.rects if r.id in ids]
    if not rects:
        return None
    lo = min(r.y if vertical else r.x for r in rects)
    hi = max(r.y2 if vertical else r.x2 for r in rects)
    adj = {i: [] for i in range(len(rects))}
    for a, b in contacts(rects):
        adj[a].append(b)
        adj[b].append(a)
    start = [i for i, r in enumerate(rects) if (r.y if vertical else r.x) == lo]
    prev = {i: None for i in start}
    q = deque(start)
    while q:
        i = q.popleft()
        r = rects[i]
        if (r.y2 if vertical else r.x2) == hi:
            path = []
            while i is not None:
                path.append(rects[i].id)
                i = prev[i]
            return path[::-1]
        for j in sorted(adj[i]):
            if j not in prev:
                prev[j] = i
                q.append(j)
    return None
