"""Binary trees, the leaf-erasing reduction, and register (Horton-Strahler) statistics.

A binary tree is represented as a nested tuple: the empty tuple ``()`` is a
leaf, and ``(left, right)`` is an internal node.  The canonical text encoding
uses ``.`` for a leaf and ``(LR)`` for an internal node, e.g. ``(.(..))``.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterator

Tree = tuple
LEAF: Tree = ()

#: Largest size accepted by exhaustive enumeration.
ENUMERATION_BOUND = 16

#: Sizes whose full (encoding, tree) lists are cached for enumeration.
_MEMO_CUTOFF = 11


def is_leaf(t: Tree) -> bool:
    return t == ()


def size(t: Tree) -> int:
    """Number of internal nodes."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node:
            count += 1
            stack.append(node[0])
            stack.append(node[1])
    return count


def leaves(t: Tree) -> int:
    """Number of leaves (size + 1)."""
    return size(t) + 1


def encode(t: Tree) -> str:
    """Canonical text encoding: ``.`` for a leaf, ``(LR)`` for a node."""
    out: list[str] = []
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif item == ():
            out.append(".")
        else:
            out.append("(")
            stack.append(")")
            stack.append(item[1])
            stack.append(item[0])
    return "".join(out)


def parse(s: str) -> Tree:
    """Parse the canonical encoding, raising ValueError with the offending position."""
    if not s:
        raise ValueError("empty tree string")
    # Stack of partially built nodes: each entry collects up to two children.
    stack: list[list[Tree]] = []
    done: Tree | None = None
    for pos, ch in enumerate(s):
        if done is not None:
            raise ValueError(f"trailing input at position {pos}")
        if ch == "(":
            stack.append([])
        elif ch == ".":
            node: Tree = LEAF
            done = _attach(stack, node, pos)
        elif ch == ")":
            if not stack:
                raise ValueError(f"unmatched ')' at position {pos}")
            children = stack.pop()
            if len(children) != 2:
                raise ValueError(f"node closed with {len(children)} children at position {pos}")
            done = _attach(stack, (children[0], children[1]), pos)
        else:
            raise ValueError(f"invalid character {ch!r} at position {pos}")
    if done is None:
        raise ValueError(f"unterminated tree at position {len(s)}")
    return done


def _attach(stack: list[list[Tree]], node: Tree, pos: int) -> Tree | None:
    if not stack:
        return node
    stack[-1].append(node)
    if len(stack[-1]) > 2:
        raise ValueError(f"node has more than two children at position {pos}")
    return None


def register(t: Tree) -> int:
    """Register (Horton-Strahler) number: 0 on leaves, max of the children's
    values when they differ, one more when they tie."""
    # Post-order with an explicit value stack; recursion-free for deep trees.
    values: list[int] = []
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if item == "up":
            right = values.pop()
            left = values.pop()
            values.append(max(left, right) + (left == right))
        elif item == ():
            values.append(0)
        else:
            stack.append("up")
            stack.append(item[1])
            stack.append(item[0])
    return values.pop()


def reduce_tree(t: Tree) -> Tree:
    """One reduction step: erase all leaves, merge every node left with a
    single child into that child (cascading), and declare the now childless
    nodes leaves.  Defined only for trees with at least one internal node."""
    if is_leaf(t):
        raise ValueError("reduction is undefined for a single leaf")
    return _reduce(t)


def _reduce(t: Tree) -> Tree:
    # Iterative post-order rewrite; each internal node maps to the reduction
    # of its non-leaf children (both leaves -> new leaf, one leaf -> pass
    # the other child through, none -> rebuild the node).
    values: list[Tree] = []
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if item == "up":
            right = values.pop()
            left = values.pop()
            values.append((left, right))
        else:
            l, r = item
            if l == () and r == ():
                values.append(LEAF)
            elif l == ():
                stack.append(r)
            elif r == ():
                stack.append(l)
            else:
                stack.append("up")
                stack.append(r)
                stack.append(l)
    return values.pop()


def reduction_trace(t: Tree) -> list[Tree]:
    """The sequence t, Phi(t), Phi^2(t), ... down to the final leaf."""
    trace = [t]
    while not is_leaf(trace[-1]):
        trace.append(reduce_tree(trace[-1]))
    return trace


@dataclass(frozen=True)
class RegisterLabeling:
    """Register value of every subtree, in preorder (node, left, right)."""

    labels: tuple[int, ...]

    def counts(self) -> list[int]:
        """How many nodes carry each label value."""
        top = max(self.labels)
        out = [0] * (top + 1)
        for lab in self.labels:
            out[lab] += 1
        return out


def label_registers(t: Tree) -> RegisterLabeling:
    """Compute the per-node register labels in preorder."""
    # Two passes: post-order values per node, then preorder emission.
    labels = _label_map(t)
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        out.append(labels[id(node)] if node else 0)
        if node:
            stack.append(node[1])
            stack.append(node[0])
    return RegisterLabeling(tuple(out))


def _label_map(t: Tree) -> dict[int, int]:
    """Register value per internal node, keyed by object identity.

    Subtree objects may be shared; that is harmless because the label is a
    function of the structure alone.
    """
    labels: dict[int, int] = {}
    values: list[int] = []
    stack: list[tuple[Tree, bool]] = [(t, False)]
    while stack:
        node, processed = stack.pop()
        if node == ():
            values.append(0)
        elif processed:
            right = values.pop()
            left = values.pop()
            val = max(left, right) + (left == right)
            labels[id(node)] = val
            values.append(val)
        else:
            stack.append((node, True))
            stack.append((node[1], False))
            stack.append((node[0], False))
    return labels


@dataclass(frozen=True)
class BranchProfile:
    """Per-register counts of maximal equal-label chains and of nodes."""

    counts: tuple[int, ...]
    node_counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)


def branch_profile(t: Tree) -> BranchProfile:
    """Count, for each register value r, the maximal chains of nodes labeled r.

    A node heads a chain exactly when its label differs from its parent's
    (the root always does), so one post-order pass suffices.
    """
    reg_top = register(t)
    counts = [0] * (reg_top + 1)
    node_counts = [0] * (reg_top + 1)
    # Walk with (node, parent_label); labels computed bottom-up via _label_map.
    labels = _label_map(t)
    stack: list[tuple[Tree, int]] = [(t, -1)]
    while stack:
        node, parent_label = stack.pop()
        lab = labels[id(node)] if node else 0
        node_counts[lab] += 1
        if lab != parent_label:
            counts[lab] += 1
        if node:
            stack.append((node[0], lab))
            stack.append((node[1], lab))
    return BranchProfile(tuple(counts), tuple(node_counts))


def count_r_branches(t: Tree, r: int) -> int:
    """Number of maximal chains of nodes labeled r (0 when r exceeds the register)."""
    profile = branch_profile(t)
    return profile.counts[r] if r < len(profile.counts) else 0


def total_branches(t: Tree) -> int:
    """Total number of maximal equal-label chains over all register values."""
    return branch_profile(t).total()


def enumerate_trees(n: int) -> Iterator[Tree]:
    """Every binary tree with n internal nodes exactly once, in lexicographic
    order of the canonical encoding."""
    _check_enum_bound(n)
    return (tree for _, tree in _pairs(n))


def enumerate_encodings(n: int) -> Iterator[str]:
    """Canonical encodings of all size-n trees, lexicographically sorted."""
    _check_enum_bound(n)
    return (enc for enc, _ in _pairs(n))


def _check_enum_bound(n: int) -> None:
    if not 0 <= n <= ENUMERATION_BOUND:
        raise ValueError(f"enumeration size {n} outside [0, {ENUMERATION_BOUND}]")


_memo: dict[int, list[tuple[str, Tree]]] = {0: [(".", LEAF)]}


def _pairs(n: int) -> Iterator[tuple[str, Tree]]:
    if n <= _MEMO_CUTOFF:
        yield from _memoized(n)
        return
    # Encodings are prefix-free, so merging the left-subtree streams by raw
    # string order and extending each with its right stream preserves global
    # lexicographic order.
    for left_enc, left in heapq.merge(*(_pairs(i) for i in range(n))):
        k = n - 1 - (len(left_enc) - 1) // 3
        for right_enc, right in _pairs(k):
            yield "(" + left_enc + right_enc + ")", (left, right)


def _memoized(n: int) -> list[tuple[str, Tree]]:
    if n not in _memo:
        pairs = [
            ("(" + le + re + ")", (lt, rt))
            for i in range(n)
            for le, lt in _memoized(i)
            for re, rt in _memoized(n - 1 - i)
        ]
        pairs.sort()
        _memo[n] = pairs
    return _memo[n]


def random_tree(n: int, seed: int | random.Random) -> Tree:
    """Uniformly random binary tree with n internal nodes.

    Grows the tree one internal node at a time: an existing node (or the
    root slot) is picked uniformly together with a side, and is replaced by
    a new internal node having a fresh leaf as the other child.  Every tree
    of size n is produced with probability 1/Catalan(n).
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n == 0:
        return LEAF
    # Flat arrays of child indices; -1 marks a leaf.  Before the k-th
    # insertion there are 2k-1 nodes, so each of the 2(2k-1) (node, side)
    # choices is equally likely, which makes every size-n shape uniform.
    left = [-1]
    right = [-1]
    parent = [-1]
    root = 0
    for k in range(1, n + 1):
        target = rng.randrange(2 * k - 1)
        side = rng.randrange(2)
        new_internal = len(left)
        new_leaf = new_internal + 1
        left.extend([-1, -1])
        right.extend([-1, -1])
        parent.extend([-1, -1])
        p = parent[target]
        if side == 0:
            left[new_internal], right[new_internal] = target, new_leaf
        else:
            left[new_internal], right[new_internal] = new_leaf, target
        parent[new_internal] = p
        parent[target] = new_internal
        parent[new_leaf] = new_internal
        if p == -1:
            root = new_internal
        elif left[p] == target:
            left[p] = new_internal
        else:
            right[p] = new_internal
    return _build(root, left, right)


def _build(root: int, left: list[int], right: list[int]) -> Tree:
    # Iterative construction mirroring _reduce's post-order pattern.
    values: list[Tree] = []
    stack: list[object] = [root]
    while stack:
        item = stack.pop()
        if item == "up":
            r = values.pop()
            l = values.pop()
            values.append((l, r))
        elif left[item] == -1:
            values.append(LEAF)
        else:
            stack.append("up")
            stack.append(right[item])
            stack.append(left[item])
    return values.pop()
