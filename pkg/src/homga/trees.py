"""Planar binary trees, face maps, leaf orientations and the R maps.

An ``n``-tree has ``n`` internal vertices and ``n + 1`` leaves numbered
``0..n`` from left to right.  Trees are immutable and hashable so the
combinatorial maps can be memoised freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


class ProductSymbol(enum.Enum):
    DASHV = "⊣"
    VDASH = "⊢"

    def __str__(self):
        return self.value


DASHV = ProductSymbol.DASHV
VDASH = ProductSymbol.VDASH


@dataclass(frozen=True)
class PlanarBinaryTree:
    left: PlanarBinaryTree | None = None
    right: PlanarBinaryTree | None = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a vertex needs both children")
        size = 0 if self.left is None else self.left.size + self.right.size + 1
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "_hash", hash((self.left, self.right)))

    def __hash__(self):
        return self._hash

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaves(self) -> int:
        return self.size + 1

    def __repr__(self):
        return "[" + "".join(map(str, word_label(self))) + "]"

    def vertex_between(self, i: int) -> int:
        """Vertex ``i`` sits between leaves ``i - 1`` and ``i`` (read-only label)."""
        if not 1 <= i <= self.size:
            raise IndexError(i)
        return i


LEAF = PlanarBinaryTree()


def graft(y1: PlanarBinaryTree, y2: PlanarBinaryTree) -> PlanarBinaryTree:
    return PlanarBinaryTree(y1, y2)


@lru_cache(maxsize=None)
def word_label(y: PlanarBinaryTree) -> tuple[int, ...]:
    if y.is_leaf:
        return (0,)
    word = [c for c in word_label(y.left) + (y.size,) + word_label(y.right) if c]
    return tuple(word)


def parse_word(text: str) -> PlanarBinaryTree:
    """Inverse of :func:`word_label` for strings such as ``"[131]"``."""
    digits = tuple(int(c) for c in text.strip().strip("[]"))
    n = 0 if digits == (0,) else len(digits)
    for y in enumerate_trees(n):
        if word_label(y) == digits:
            return y
    raise ValueError(f"no planar binary tree has word {text!r}")


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[PlanarBinaryTree, ...]:
    """All ``n``-trees: larger left subtree first, then recursively by the
    left and right subtrees.  For ``n <= 3`` this is the familiar listing
    ``[0], [1], [12], [21], [123], [213], [131], [312], [321]``."""
    if n < 0:
        raise ValueError("negative vertex count")
    if n == 0:
        return (LEAF,)
    out = []
    for p in range(n - 1, -1, -1):
        for left in enumerate_trees(p):
            for right in enumerate_trees(n - 1 - p):
                out.append(PlanarBinaryTree(left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def tree_index(y: PlanarBinaryTree) -> int:
    return enumerate_trees(y.size).index(y)


@lru_cache(maxsize=None)
def face(y: PlanarBinaryTree, i: int) -> PlanarBinaryTree:
    """Delete leaf ``i`` and smooth the vertex it hung from."""
    if y.is_leaf or not 0 <= i <= y.size:
        raise IndexError(f"face index {i} out of range for a {y.size}-tree")
    nleft = y.left.leaves
    if i < nleft:
        if y.left.is_leaf:
            return y.right
        return PlanarBinaryTree(face(y.left, i), y.right)
    if y.right.is_leaf:
        return y.left
    return PlanarBinaryTree(y.left, face(y.right, i - nleft))


def apply_faces(y: PlanarBinaryTree, indices: Sequence[int]) -> PlanarBinaryTree:
    """Apply ``d_{i_1} d_{i_2} ... d_{i_r}`` written left to right, i.e. the
    rightmost face map acts first."""
    for i in reversed(indices):
        y = face(y, i)
    return y


def leaf_is_left_child(y: PlanarBinaryTree, i: int) -> bool:
    if y.is_leaf or not 0 <= i <= y.size:
        raise IndexError(f"leaf {i} out of range for a {y.size}-tree")
    while True:
        nleft = y.left.leaves
        if i < nleft:
            if y.left.is_leaf:
                return True
            y = y.left
        else:
            if y.right.is_leaf:
                return False
            y, i = y.right, i - nleft


@lru_cache(maxsize=None)
def bullet(y: PlanarBinaryTree, i: int) -> ProductSymbol:
    """The product symbol at position ``i`` of a tree with ``n + 1``
    vertices, ``0 <= i <= n + 1``.  A leaf that is a left child slants like
    a backslash."""
    top = y.size
    if y.is_leaf or not 0 <= i <= top:
        raise IndexError(f"bullet position {i} out of range for a {top}-tree")
    if i == 0:
        return DASHV if y.left.is_leaf else VDASH
    if i == top:
        return VDASH if y.right.is_leaf else DASHV
    return DASHV if leaf_is_left_child(y, i) else VDASH


def _partial_sums(ns: Sequence[int]) -> list[int]:
    sums = [0]
    for n in ns:
        sums.append(sums[-1] + n)
    return sums


def _check_shape(k: int, ns: Sequence[int], y: PlanarBinaryTree) -> None:
    if k < 1 or len(ns) != k or any(n < 1 for n in ns):
        raise ValueError(f"bad shape k={k}, ns={tuple(ns)}")
    if y.size != sum(ns):
        raise ValueError(f"tree has {y.size} vertices, shape needs {sum(ns)}")


def r0_faces(ns: Sequence[int]) -> list[int]:
    """Face indices of R_0, in the written (left-to-right) order."""
    sums = _partial_sums(ns)
    kept = set(sums)
    return [j for j in range(sums[-1] + 1) if j not in kept]


def ri_faces(ns: Sequence[int], i: int) -> list[int]:
    sums = _partial_sums(ns)
    lo, hi = sums[i - 1], sums[i]
    return [j for j in range(sums[-1] + 1) if j < lo or j > hi]


@lru_cache(maxsize=None)
def r0(k: int, ns: tuple, y: PlanarBinaryTree) -> PlanarBinaryTree:
    ns = tuple(ns)
    _check_shape(k, ns, y)
    return apply_faces(y, r0_faces(ns))


@lru_cache(maxsize=None)
def ri(k: int, ns: tuple, i: int, y: PlanarBinaryTree) -> PlanarBinaryTree:
    ns = tuple(ns)
    _check_shape(k, ns, y)
    if not 1 <= i <= k:
        raise ValueError(f"R_i index {i} outside 1..{k}")
    return apply_faces(y, ri_faces(ns, i))


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c
