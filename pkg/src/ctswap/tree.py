"""Cartesian trees over sequence positions.

The tree of a sequence has the minimum key at the root, the tree of the
left factor as its left subtree and the tree of the right factor as its
right subtree; an in-order traversal therefore reads off positions 1..n in
increasing order. Nodes are identified by their 1-based sequence position,
so two trees are equal iff they have the same shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import InvalidPDError
from .sequence import _check_tie_mode, as_keys, check_distinct


@dataclass(frozen=True)
class CartesianTree:
    root: int  # 1-based sequence position of the minimum
    left: Optional["CartesianTree"]
    right: Optional["CartesianTree"]
    size: int

    def node(self, position: int) -> "CartesianTree":
        """Subtree rooted at the given 1-based position."""
        t = self
        while t is not None:
            if position == t.root:
                return t
            t = t.left if position < t.root else t.right
        raise KeyError(position)

    def positions(self) -> list[int]:
        """In-order positions (always lo..hi for a subtree)."""
        out: list[int] = []
        stack: list[tuple[CartesianTree, bool]] = [(self, False)]
        while stack:
            t, expanded = stack.pop()
            if t is None:
                continue
            if expanded:
                out.append(t.root)
            else:
                stack.append((t.right, False))
                stack.append((t, True))
                stack.append((t.left, False))
        return out


def left_spine(t: CartesianTree | None) -> list[int]:
    """Positions along the chain of left children from the root."""
    out = []
    while t is not None:
        out.append(t.root)
        t = t.left
    return out


def right_spine(t: CartesianTree | None) -> list[int]:
    out = []
    while t is not None:
        out.append(t.root)
        t = t.right
    return out


def build_tree(values, tie_mode: str = "strict") -> CartesianTree:
    """Build the Cartesian tree of a nonempty sequence in linear time."""
    _check_tie_mode(tie_mode)
    keys = as_keys(values)
    if not keys:
        raise ValueError("cannot build the Cartesian tree of an empty sequence")
    if tie_mode == "strict":
        check_distinct(keys)

    n = len(keys)
    left = [0] * (n + 1)  # 0 = no child
    right = [0] * (n + 1)
    stack: list[int] = []  # right spine, keys increasing bottom to top
    for pos in range(1, n + 1):
        k = keys[pos - 1]
        last = 0
        # ties break toward the earlier position (matters only in lenient mode)
        while stack and keys[stack[-1] - 1] > k:
            last = stack.pop()
        left[pos] = last
        if stack:
            right[stack[-1]] = pos
        stack.append(pos)
    return _build_from_arrays(stack[0], left, right)


def tree_to_pd(t: CartesianTree) -> tuple[int, ...]:
    """Forward parent-distance table of any sequence realizing the tree.

    The nearest smaller key to the left of position p is the closest
    ancestor that holds p in its right subtree, so one traversal carrying
    that ancestor's position suffices.
    """
    pd = [0] * t.size
    todo: list[tuple[CartesianTree | None, int]] = [(t, 0)]
    while todo:
        node, right_anchor = todo.pop()
        if node is None:
            continue
        pd[node.root - 1] = node.root - right_anchor if right_anchor else 0
        todo.append((node.left, right_anchor))
        todo.append((node.right, node.root))
    return tuple(pd)


def pd_to_tree(pd) -> CartesianTree:
    """Rebuild the unique Cartesian tree encoded by a forward PD table.

    Raises InvalidPDError when the table is not realizable: a stack-based
    reconstruction must never have to pop past its claimed parent.
    """
    pd = list(pd)
    n = len(pd)
    if n == 0:
        raise ValueError("empty parent-distance table")
    left: list[int] = [0] * (n + 1)  # 0 = no child
    right: list[int] = [0] * (n + 1)
    stack: list[int] = []
    for i, d in enumerate(pd, start=1):
        if not isinstance(d, int) or isinstance(d, bool):
            raise InvalidPDError(i, f"entry {d!r} is not an integer")
        if d < 0 or d > i - 1:
            raise InvalidPDError(i, f"entry {d} outside 0..{i - 1}")
        last = 0
        if d == 0:
            while stack:
                last = stack.pop()
        else:
            parent = i - d
            while stack and stack[-1] > parent:
                last = stack.pop()
            if not stack or stack[-1] != parent:
                raise InvalidPDError(i, f"claimed parent position {parent} is unreachable")
            right[parent] = i
        left[i] = last
        stack.append(i)

    root = stack[0]
    return _build_from_arrays(root, left, right)


def _build_from_arrays(root: int, left: list[int], right: list[int]) -> CartesianTree:
    # post-order assembly, no recursion
    memo: dict[int, CartesianTree] = {}
    order: list[int] = []
    todo = [root]
    while todo:
        p = todo.pop()
        order.append(p)
        if left[p]:
            todo.append(left[p])
        if right[p]:
            todo.append(right[p])
    for p in reversed(order):
        lnode = memo.get(left[p])
        rnode = memo.get(right[p])
        size = 1 + (lnode.size if lnode else 0) + (rnode.size if rnode else 0)
        memo[p] = CartesianTree(p, lnode, rnode, size)
    return memo[root]


def is_valid_pd(pd) -> bool:
    """True iff the table is realizable by some sequence."""
    try:
        pd_to_tree(pd)
    except (InvalidPDError, ValueError):
        return False
    return True


def canonical_sequence(t: CartesianTree) -> list[float]:
    """A representative sequence whose Cartesian tree is ``t``.

    Labels are assigned in root-left-right order, so every root is smaller
    than everything in its subtree, then read off by in-order position.
    """
    seq = [0.0] * t.size
    counter = 1
    todo = [t]
    while todo:
        node = todo.pop()
        if node is None:
            continue
        seq[node.root - 1] = float(counter)
        counter += 1
        # right pushed first so the left subtree is labeled first
        todo.append(node.right)
        todo.append(node.left)
    return seq


def enumerate_trees(n: int) -> list[CartesianTree]:
    """All binary trees over positions 1..n (Catalan(n) of them)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_trees_over(1, n))


@lru_cache(maxsize=None)
def _trees_over(lo: int, hi: int) -> tuple:
    if lo > hi:
        return (None,)
    out = []
    for k in range(lo, hi + 1):
        for left in _trees_over(lo, k - 1):
            for right in _trees_over(k + 1, hi):
                size = hi - lo + 1
                out.append(CartesianTree(k, left, right, size))
    return tuple(out)
