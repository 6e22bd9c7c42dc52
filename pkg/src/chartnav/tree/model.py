"""Accessibility tree types: addressed nodes, the indexed tree, snapshots."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Optional

from ..errors import NotAGroupNodeError, UnknownAddressError
from ..chart.model import Channel, TransformedView


class NodeKind(str, Enum):
    ROOT = "root"
    CHANNEL = "channel"
    GROUP = "group"
    LEAF = "leaf"


@dataclass
class TreeNode:
    address: str  # dot-separated, e.g. "1.2.6"
    level: int  # 1..4, equals address segment count
    kind: NodeKind
    label: str
    field: Optional[str] = None
    channel: Optional[Channel] = None
    # category value for nominal groups, (lo, hi) for interval groups
    span: Optional[object] = None
    children: list = dc_field(default_factory=list)
    row_indices: tuple = ()

    @property
    def sibling_index(self) -> int:
        """1-based position among siblings (last address segment)."""
        return int(self.address.rsplit(".", 1)[-1])

    @property
    def parent_address(self) -> Optional[str]:
        if "." not in self.address:
            return None
        return self.address.rsplit(".", 1)[0]

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class AccessTree:
    root: TreeNode
    node_index: dict
    tree_text: str

    def resolve(self, address: str) -> TreeNode:
        node = self.node_index.get(address)
        if node is None:
            raise UnknownAddressError(f"no node at address {address!r}")
        return node

    def parent_of(self, node: TreeNode) -> Optional[TreeNode]:
        addr = node.parent_address
        return self.node_index[addr] if addr else None

    def siblings_of(self, node: TreeNode) -> list:
        parent = self.parent_of(node)
        return parent.children if parent else [node]

    def ancestry(self, address: str) -> list:
        """Nodes from the root down to the addressed node, inclusive."""
        node = self.resolve(address)
        segments = node.address.split(".")
        return [self.resolve(".".join(segments[: i + 1])) for i in range(len(segments))]

    def __len__(self) -> int:
        return len(self.node_index)


@dataclass(frozen=True)
class SnapshotTable:
    columns: tuple
    rows: tuple
    origin_address: str


def snapshot_table(tree: AccessTree, address: str, view: TransformedView) -> SnapshotTable:
    """Open the on-demand data table for a group node."""
    node = tree.resolve(address)
    if node.kind is not NodeKind.GROUP:
        raise NotAGroupNodeError(f"node {address!r} is a {node.kind.value}, not a group")
    rows = tuple(view.rows[i] for i in node.row_indices)
    return SnapshotTable(columns=view.columns, rows=rows, origin_address=address)
