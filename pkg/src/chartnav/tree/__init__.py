"""Keyboard-navigable accessibility tree compiled from a chart view."""

from .binning import bin_intervals, interval_contains
from .build import build_tree
from .labels import render_node_label, render_root_label, render_tree_text
from .model import AccessTree, NodeKind, SnapshotTable, TreeNode, snapshot_table

__all__ = [
    "AccessTree",
    "NodeKind",
    "SnapshotTable",
    "TreeNode",
    "bin_intervals",
    "build_tree",
    "interval_contains",
    "render_node_label",
    "render_root_label",
    "render_tree_text",
    "snapshot_table",
]
