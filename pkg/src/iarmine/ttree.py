"""Instrumented "reverse" set-enumeration tree (T-tree).

Itemset ``(i1 < i2 < ... < ik)`` lives at
``top[ik].children[i(k-1)] ... .children[i1]``: the largest item is the
top-level slot and each step down the tree moves to a smaller item. A node's
child array has exactly ``item - 1`` slots, one per smaller item, and is
allocated on first use.

Every node is charged 12 bytes (node reference, support count, child array
reference), so ``storage_bytes`` is always ``12 * node_count``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Itemset, StructuralError

NODE_BYTES = 12


class TTreeNode:
    __slots__ = ("support", "children")

    def __init__(self):
        self.support = 0
        self.children: list[TTreeNode | None] | None = None


@dataclass
class TTreeMetrics:
    node_count: int = 0         # peak materialized nodes
    final_node_count: int = 0   # materialized nodes right now
    update_count: int = 0       # cumulative support increments

    @property
    def storage_bytes(self) -> int:
        return NODE_BYTES * self.node_count


class TTree:
    def __init__(self, universe_size: int):
        if universe_size < 1:
            raise ValueError("universe_size must be >= 1")
        self.universe_size = universe_size
        # index 0 unused so top[i] is item i
        self.top: list[TTreeNode | None] = [None] * (universe_size + 1)
        self.metrics = TTreeMetrics()

    def _locate(self, x: Sequence[int]) -> TTreeNode | None:
        if not x or x[-1] > self.universe_size or x[0] < 1:
            return None
        node = self.top[x[-1]]
        for j in range(len(x) - 2, -1, -1):
            if node is None or node.children is None:
                return None
            node = node.children[x[j] - 1]
        return node

    def _add_live(self, n: int) -> None:
        m = self.metrics
        m.final_node_count += n
        if m.final_node_count > m.node_count:
            m.node_count = m.final_node_count

    def insert_candidate(self, x: Itemset) -> None:
        """Materialize a zero-support node for ``x``; its parent ``x[1:]`` must exist."""
        if not x:
            raise ValueError("cannot insert the empty itemset")
        if x[-1] > self.universe_size:
            raise ValueError(f"item {x[-1]} outside universe 1..{self.universe_size}")
        if len(x) == 1:
            if self.top[x[0]] is None:
                self.top[x[0]] = TTreeNode()
                self._add_live(1)
            return
        parent = self._locate(x[1:])
        if parent is None:
            raise StructuralError(f"parent {x[1:]} of {x} is not in the tree")
        if parent.children is None:
            parent.children = [None] * (x[1] - 1)
        if parent.children[x[0] - 1] is None:
            parent.children[x[0] - 1] = TTreeNode()
            self._add_live(1)

    def increment_support(self, x: Itemset) -> None:
        node = self._locate(x)
        if node is None:
            raise StructuralError(f"{x} is not in the tree")
        node.support += 1
        self.metrics.update_count += 1

    def support_of(self, x: Sequence[int]) -> int | None:
        """Support of ``x`` if its node is present, else ``None``."""
        node = self._locate(x)
        return None if node is None else node.support

    def count_transaction(self, t: Sequence[int], k: int) -> int:
        """Increment every depth-``k`` node whose itemset is contained in ``t``.

        Returns (and adds to ``update_count``) the number of increments.
        """
        if len(t) < k:
            return 0
        n = _count(self.top, t, len(t), k)
        self.metrics.update_count += n
        return n

    def prune_level(self, k: int, min_count: int) -> list[Itemset]:
        """Drop depth-``k`` nodes with support below ``min_count``; return survivors sorted."""
        survivors: list[Itemset] = []
        removed = _prune(self.top, k, min_count, (), survivors)
        self.metrics.final_node_count -= removed
        survivors.sort()
        return survivors

    def frequent_itemsets(self) -> list[tuple[Itemset, int]]:
        out: list[tuple[Itemset, int]] = []
        _collect(self.top, (), out)
        out.sort()
        return out


def _count(slots, t, end, k) -> int:
    # candidates drawn from t[:end]; remaining depth k
    n = 0
    if k == 1:
        for p in range(end):
            node = slots[t[p]]
            if node is not None:
                node.support += 1
                n += 1
        return n
    for p in range(k - 1, end):
        node = slots[t[p]]
        if node is not None and node.children is not None:
            n += _count_children(node.children, t, p, k - 1)
    return n


def _count_children(children, t, end, k) -> int:
    # child arrays are 0-based: slot j-1 holds item j
    n = 0
    if k == 1:
        for p in range(end):
            node = children[t[p] - 1]
            if node is not None:
                node.support += 1
                n += 1
        return n
    for p in range(k - 1, end):
        node = children[t[p] - 1]
        if node is not None and node.children is not None:
            n += _count_children(node.children, t, p, k - 1)
    return n


def _subtree_size(node: TTreeNode) -> int:
    size = 1
    if node.children is not None:
        for child in node.children:
            if child is not None:
                size += _subtree_size(child)
    return size


def _entries(array, top):
    """Yield (item, index) pairs; the top array is item-indexed, child arrays item-1."""
    if top:
        return ((i, i) for i in range(1, len(array)))
    return ((i + 1, i) for i in range(len(array)))


def _prune(array, k, min_count, suffix, survivors) -> int:
    removed = 0
    for item, idx in _entries(array, not suffix):
        node = array[idx]
        if node is None:
            continue
        here = (item,) + suffix
        if k == 1:
            if node.support < min_count:
                removed += _subtree_size(node)
                array[idx] = None
            else:
                survivors.append(here)
        elif node.children is not None:
            removed += _prune(node.children, k - 1, min_count, here, survivors)
    return removed


def _collect(array, suffix, out) -> None:
    for item, idx in _entries(array, not suffix):
        node = array[idx]
        if node is None:
            continue
        here = (item,) + suffix
        out.append((here, node.support))
        if node.children is not None:
            _collect(node.children, here, out)
