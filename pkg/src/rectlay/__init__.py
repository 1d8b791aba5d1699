"""Rectangular layouts: contact representations of planar graphs by axis-parallel rectangles."""

from .feasibility import FeasibilityVerdict, NotLayoutable, embed_without_filled_triangles, is_layoutable
from .graph import Graph, Nonplanar, separating_triangles
from .layout import STRONG, WEAK, Layout, Rect, area, bbox, contact_graph, validate_layout
from .oracle import BudgetExceeded, OracleResult, brute_force_min_area
from .pipeline import layout_graph, remove_corner_contacts, strengthen
from .trees import (
    RootedTree,
    heavy_path_partition,
    layout_complete_tree,
    layout_tree_A,
    layout_tree_B,
    strong_tree_layout,
)

__all__ = [
    "FeasibilityVerdict", "NotLayoutable", "embed_without_filled_triangles", "is_layoutable",
    "Graph", "Nonplanar", "separating_triangles",
    "STRONG", "WEAK", "Layout", "Rect", "area", "bbox", "contact_graph", "validate_layout",
    "BudgetExceeded", "OracleResult", "brute_force_min_area",
    "layout_graph", "remove_corner_contacts", "strengthen",
    "RootedTree", "heavy_path_partition", "layout_complete_tree", "layout_tree_A", "layout_tree_B",
    "strong_tree_layout",
]
