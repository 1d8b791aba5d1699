"""JSON formats for graphs and layouts.

Graph file: ``{"n", "edges", "root"?, "annotations"?}``.
Layout file: ``{"mode", "rects": [{"id" | "gap", "x", "y", "w", "h"}]}``.
Keys are written in a fixed order so files diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph
from .layout import STRONG, WEAK, Layout, Rect


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class GraphDoc:
    graph: Graph
    root: int | None = None
    annotations: dict[int, str] = field(default_factory=dict)


def _int(v, what) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what} must be an integer, got {v!r}")
    return v


def graph_from_dict(d) -> GraphDoc:
    if not isinstance(d, dict) or "n" not in d or "edges" not in d:
        raise FormatError("graph needs 'n' and 'edges'")
    n = _int(d["n"], "n")
    if n < 0:
        raise FormatError("n must be non-negative")
    seen = set()
    edges = []
    for e in d["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise FormatError(f"edge {e!r} is not a pair")
        u, v = _int(e[0], "edge end"), _int(e[1], "edge end")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {e!r} out of range")
        if u == v:
            raise FormatError(f"loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    root = d.get("root")
    if root is not None:
        root = _int(root, "root")
        if not 0 <= root < n:
            raise FormatError("root out of range")
    ann = {}
    for k, v in (d.get("annotations") or {}).items():
        try:
            ann[int(k)] = str(v)
        except ValueError:
            raise FormatError(f"annotation key {k!r} is not a vertex id") from None
    return GraphDoc(Graph(n, edges), root, ann)


def graph_to_dict(g: Graph, root: int | None = None, annotations: dict | None = None) -> dict:
    d = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if root is not None:
        d["root"] = root
    if annotations:
        d["annotations"] = {str(k): annotations[k] for k in sorted(annotations)}
    return d


def layout_from_dict(d) -> Layout:
    if not isinstance(d, dict) or "rects" not in d:
        raise FormatError("layout needs 'rects'")
    mode = d.get("mode", STRONG)
    if mode not in (STRONG, WEAK):
        raise FormatError(f"unknown mode {mode!r}")
    rects = []
    for r in d["rects"]:
        if not isinstance(r, dict):
            raise FormatError(f"rect {r!r} is not an object")
        if r.get("gap"):
            rid = None
        elif "id" in r:
            rid = _int(r["id"], "rect id")
        else:
            raise FormatError(f"rect {r!r} has neither id nor gap")
        try:
            rects.append(Rect(rid, *(_int(r[k], k) for k in ("x", "y", "w", "h"))))
        except KeyError as exc:
            raise FormatError(f"rect {r!r} lacks {exc}") from None
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return Layout(tuple(rects), mode)


def layout_to_dict(l: Layout) -> dict:
    rects = []
    for r in l.rects:
        head = {"gap": True} if r.is_gap else {"id": r.id}
        rects.append({**head, "x": r.x, "y": r.y, "w": r.w, "h": r.h})
    return {"mode": l.mode, "rects": rects}


def dumps(d: dict) -> str:
    return json.dumps(d, indent=1) + "\n"


def _load(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None


def read_graph(path) -> GraphDoc:
    return graph_from_dict(_load(path))


def write_graph(path, g: Graph, root: int | None = None, annotations: dict | None = None) -> None:
    Path(path).write_text(dumps(graph_to_dict(g, root, annotations)))


def read_layout(path) -> Layout:
    return layout_from_dict(_load(path))


def write_layout(path, l: Layout) -> None:
    Path(path).write_text(dumps(layout_to_dict(l)))
