"""Command line: check, layout, gen, validate, oracle, render.

Exit codes: 0 success or positive answer, 1 valid negative answer, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import families
from .feasibility import NotLayoutable, is_layoutable
from .graph import Graph, is_connected
from .io import FormatError, dumps, graph_to_dict, layout_to_dict, read_graph, read_layout
from .layout import STRONG, WEAK, validate_layout
from .oracle import BudgetExceeded, brute_force_min_area
from .pipeline import layout_graph
from .render import RenderStyle, render_svg
from .trees import InvalidParameters, RootedTree, heavy_path_partition, layout_tree_B, strong_tree_layout

OK, NEGATIVE, BAD_INPUT = 0, 1, 2
ORACLE_LIMIT = 8


class InputError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph(path):
    try:
        return read_graph(path)
    except (OSError, FormatError) as exc:
        raise InputError(str(exc)) from None


def _connected(g: Graph) -> None:
    if not is_connected(g):
        raise InputError("graph is not connected")


def cmd_check(args) -> int:
    g = _graph(args.graph).graph
    _connected(g)
    v = is_layoutable(g)
    print(json.dumps(v.to_dict()))
    return OK if v.layoutable else NEGATIVE


def cmd_layout(args) -> int:
    doc = _graph(args.graph)
    g = doc.graph
    _connected(g)
    if args.tree:
        if doc.root is None:
            raise InputError("--tree needs a 'root' field in the graph file")
        try:
            t = RootedTree.from_graph(g, doc.root)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        l = layout_tree_B(t, heavy_path_partition(t))
        if args.mode == STRONG:
            l = strong_tree_layout(l, t)
    else:
        try:
            l = layout_graph(g)
        except NotLayoutable as exc:
            print(json.dumps(exc.verdict.to_dict()))
            return NEGATIVE
    rep = validate_layout(l, g, args.mode)
    if not rep.ok:
        raise RuntimeError(f"produced layout fails validation: {rep.to_dict()}")
    _emit(dumps(layout_to_dict(l)), args.out)
    if args.svg:
        Path(args.svg).write_text(render_svg(l, RenderStyle(args.scale, True, args.labels)))
    return OK


def _gen_graph(args):
    fam, p = args.family, args.params
    try:
        if fam == "ladder":
            return families.gen_ladder(p[0], args.subdivide), None, None
        if fam == "ij-ladder":
            return families.gen_ij_ladder(p[0], p[1], args.subdivide), None, None
        if fam == "accordion":
            return families.gen_accordion(p[0], args.enclosed), None, None
        if fam == "npgadget":
            inst = families.NMTSInstance(args.x, args.y, args.b)
            gd = families.gen_np_gadget(inst, args.scale_small)
            ann = dict(gd.annotations)
            return gd.graph, None, ann
        if fam in ("binary", "star"):
            t = families.gen_complete_binary(p[0]) if fam == "binary" else families.gen_star_tree(p[0])
            return t.to_graph(), t.root, None
        if fam == "random":
            rng = random.Random(args.seed if args.seed is not None else families.harness_seed())
            return families.random_layoutable_graph(p[0], rng), None, None
        if fam == "random-tree":
            rng = random.Random(args.seed if args.seed is not None else families.harness_seed())
            t = families.random_tree(p[0], rng)
            return t.to_graph(), t.root, None
    except IndexError:
        raise InputError(f"family {fam} needs more parameters") from None
    except (InvalidParameters, ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    raise InputError(f"unknown family {fam}")


def cmd_gen(args) -> int:
    g, root, ann = _gen_graph(args)
    _emit(dumps(graph_to_dict(g, root, ann)), args.out)
    return OK


def _layout(path):
    try:
        return read_layout(path)
    except (OSError, FormatError) as exc:
        raise InputError(str(exc)) from None


def cmd_validate(args) -> int:
    l = _layout(args.layout)
    g = _graph(args.graph).graph
    rep = validate_layout(l, g, args.mode)
    print(json.dumps(rep.to_dict()))
    return OK if rep.ok else NEGATIVE


def cmd_oracle(args) -> int:
    g = _graph(args.graph).graph
    if g.n > ORACLE_LIMIT and not args.force:
        raise InputError(f"{g.n} vertices is beyond the oracle's reach; pass --force to try anyway")
    try:
        res = brute_force_min_area(g, args.max_w, args.max_h)
    except BudgetExceeded as exc:
        print(json.dumps({"min_area": None, "exhausted": False, "error": str(exc)}))
        return NEGATIVE
    _emit(dumps(res.to_dict()), args.out)
    return OK if res.min_area is not None else NEGATIVE


def cmd_render(args) -> int:
    l = _layout(args.layout)
    if not l.rects:
        raise InputError("layout has no rectangles")
    try:
        style = RenderStyle(args.scale, not args.no_gaps, args.labels)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(render_svg(l, style), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rectlay", description="Rectangular layouts of planar graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="decide layoutability")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("layout", help="compute a layout")
    p.add_argument("graph")
    p.add_argument("--tree", action="store_true", help="tree algorithm with heavy paths (needs 'root')")
    p.add_argument("--mode", choices=(STRONG, WEAK), default=STRONG)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.add_argument("--scale", type=int, default=20)
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("family", choices=("ladder", "ij-ladder", "accordion", "npgadget", "binary", "star",
                                      "random", "random-tree"))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--subdivide", type=int, default=0)
    p.add_argument("--enclosed", action="store_true")
    p.add_argument("--x", type=int, nargs="+", default=[2])
    p.add_argument("--y", type=int, nargs="+", default=[3])
    p.add_argument("--b", type=int, nargs="+", default=[5])
    p.add_argument("--scale-small", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="check a layout against a graph")
    p.add_argument("layout")
    p.add_argument("graph")
    p.add_argument("--mode", choices=(STRONG, WEAK), default=STRONG)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("oracle", help="exhaustive minimum area for tiny graphs")
    p.add_argument("graph")
    p.add_argument("--max-w", type=int, default=6)
    p.add_argument("--max-h", type=int, default=6)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="draw a layout as SVG")
    p.add_argument("layout")
    p.add_argument("--out")
    p.add_argument("--scale", type=int, default=20)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--no-gaps", action="store_true")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
