"""Tree shapes T1(k) / T2(k), labelings and the combinatorial orientation
predictor.

Node ids are ``(level, position)`` with positions counted left to right.
In a type-1 tree the unlabeled root is ``(0, 0)`` and level ``j`` holds
``2**j`` nodes. In a type-2 tree the labeled root is ``(1, 0)``, its three
children sit on level 2 and every deeper node splits in two. Level ``j`` of
either tree is labeled by the ``j``-th convex layer (innermost = 1).

The type-2 tree embeds in T1(k) with unchanged node ids: its root is the
left child of the type-1 root, and its level-``j`` nodes are the first
``3 * 2**(j-2)`` type-1 nodes of that level. Orientation prediction runs on
that embedding.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .geometry import LayerDecomposition, Orientation, Point


class Kind(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"


class NodeId(NamedTuple):
    level: int
    position: int


class DescendantRange(NamedTuple):
    level: int
    first_index: int
    last_index: int

    def __len__(self) -> int:
        return self.last_index - self.first_index + 1


@dataclass(frozen=True)
class TreeShape:
    kind: Kind
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("depth must be positive")

    @property
    def root(self) -> NodeId:
        return NodeId(0, 0) if self.kind is Kind.TYPE1 else NodeId(1, 0)

    @property
    def n(self) -> int:
        if self.kind is Kind.TYPE1:
            return 2 ** (self.k + 1) - 2
        return 3 * 2 ** (self.k - 1) - 2

    @property
    def grid_bound(self) -> int:
        return 2 * 5 ** (self.k + 1)

    def width(self, level: int) -> int:
        if self.kind is Kind.TYPE1:
            if not 0 <= level <= self.k:
                raise ValueError(f"no level {level}")
            return 2 ** level
        if not 1 <= level <= self.k:
            raise ValueError(f"no level {level}")
        return 1 if level == 1 else 3 * 2 ** (level - 2)

    def layer_sizes(self) -> list[int]:
        """Expected convex layer sizes, innermost first."""
        return [self.width(j) for j in range(1, self.k + 1)]

    def contains(self, u: NodeId) -> bool:
        lo = 0 if self.kind is Kind.TYPE1 else 1
        return lo <= u.level <= self.k and 0 <= u.position < self.width(u.level)

    def is_labeled(self, u: NodeId) -> bool:
        return self.contains(u) and u.level >= 1

    def nodes(self) -> Iterator[NodeId]:
        """Labeled nodes, level by level, left to right."""
        for j in range(1, self.k + 1):
            for i in range(self.width(j)):
                yield NodeId(j, i)

    def children(self, u: NodeId) -> list[NodeId]:
        if not self.contains(u):
            raise ValueError(f"{u} is not a node of {self}")
        if u.level == self.k:
            return []
        if self.kind is Kind.TYPE2 and u.level == 1:
            return [NodeId(2, 0), NodeId(2, 1), NodeId(2, 2)]
        return [NodeId(u.level + 1, 2 * u.position), NodeId(u.level + 1, 2 * u.position + 1)]

    def parent(self, u: NodeId) -> NodeId | None:
        if u == self.root:
            return None
        if self.kind is Kind.TYPE2 and u.level == 2:
            return self.root
        return NodeId(u.level - 1, u.position // 2)

    def is_descendant(self, v: NodeId, u: NodeId) -> bool:
        """Whether ``v`` lies in the subtree rooted at ``u`` (``v == u`` counts)."""
        if v.level < u.level:
            return False
        if u == self.root:
            return True
        return v.position >> (v.level - u.level) == u.position


def tree_shape_for(n: int) -> TreeShape | None:
    """The unique tree shape with ``n`` labeled nodes, or ``None``."""
    if n < 1:
        return None
    m = n + 2
    if m & (m - 1) == 0:
        return TreeShape(Kind.TYPE1, m.bit_length() - 2)
    if m % 3 == 0:
        q = m // 3
        if q & (q - 1) == 0:
            return TreeShape(Kind.TYPE2, q.bit_length())
    return None


def admissible_neighbours(n: int) -> tuple[int | None, int]:
    """Largest admissible cardinality below ``n`` and smallest above."""
    below = next((m for m in range(n - 1, 0, -1) if tree_shape_for(m)), None)
    above = n + 1
    while tree_shape_for(above) is None:
        above += 1
    return below, above


def descendant_range(shape: TreeShape, u: NodeId, j: int) -> DescendantRange:
    """Positions on level ``j`` of the descendants of ``u``."""
    if not shape.contains(u):
        raise ValueError(f"{u} is not a node of {shape}")
    if not u.level <= j <= shape.k or j < 1:
        raise ValueError(f"level {j} out of range for {u}")
    if u == shape.root:
        return DescendantRange(j, 0, shape.width(j) - 1)
    span = 1 << (j - u.level)
    return DescendantRange(j, u.position * span, (u.position + 1) * span - 1)


@dataclass(frozen=True, eq=False)
class Labeling:
    """Assignment of the convex layers to the levels of a tree shape.

    Node ``(j, i)`` is labeled by ``layers[j - 1][(i + offsets[j - 1]) % w]``
    where ``w`` is the level width; the left-to-right node order therefore
    follows the counterclockwise order of the layer.
    """

    shape: TreeShape
    layers: LayerDecomposition
    offsets: tuple[int, ...]

    def __post_init__(self):
        if len(self.layers) != self.shape.k or len(self.offsets) != self.shape.k:
            raise ValueError("one layer and one offset per level required")
        for j, layer in enumerate(self.layers, start=1):
            if len(layer) != self.shape.width(j):
                raise ValueError(f"layer {j} has {len(layer)} points, level needs "
                                 f"{self.shape.width(j)}")

    def level_labels(self, j: int) -> np.ndarray:
        """Labels of level ``j`` in node order."""
        layer = self.layers[j - 1]
        return np.roll(layer, -self.offsets[j - 1], axis=0)

    def label(self, u: NodeId) -> Point:
        if not self.shape.is_labeled(u):
            raise ValueError(f"{u} carries no label")
        layer = self.layers[u.level - 1]
        x, y = layer[(u.position + self.offsets[u.level - 1]) % len(layer)]
        return int(x), int(y)

    @cached_property
    def _node_index(self) -> dict:
        return {self.label(u): u for u in self.shape.nodes()}

    def node_of(self, p: Point) -> NodeId:
        return self._node_index[tuple(p)]

    def items(self) -> Iterator[tuple[NodeId, Point]]:
        for u in self.shape.nodes():
            yield u, self.label(u)

    def subtree(self, u: NodeId, strict: bool = False) -> list[Point]:
        """Labels of the subtree at ``u``; ``strict`` drops ``u`` itself."""
        out = []
        lo = u.level + 1 if strict or u.level == 0 else u.level
        for j in range(max(lo, 1), self.shape.k + 1):
            r = descendant_range(self.shape, u, j)
            labels = self.level_labels(j)[r.first_index:r.last_index + 1]
            out.extend((int(x), int(y)) for x, y in labels.tolist())
        return out

    @property
    def points(self) -> list[Point]:
        return [p for _, p in self.items()]


def boundary_points(labeling: Labeling, u: NodeId, j: int) -> tuple[Point, Point, Point, Point]:
    """``(first, last, previous, next)`` of the level-``j`` descendants of ``u``.

    Previous and next are taken cyclically on the whole layer; they do not
    exist when ``u`` owns the entire layer.
    """
    r = descendant_range(labeling.shape, u, j)
    w = labeling.shape.width(j)
    if len(r) == w:
        raise ValueError(f"{u} owns all of layer {j}; previous/next undefined")
    labels = labeling.level_labels(j)

    def at(i):
        x, y = labels[i % w]
        return int(x), int(y)

    return at(r.first_index), at(r.last_index), at(r.first_index - 1), at(r.last_index + 1)


def _lca(a: NodeId, b: NodeId) -> NodeId:
    la, pa = a
    lb, pb = b
    if la > lb:
        pa >>= la - lb
        la = lb
    elif lb > la:
        pb >>= lb - la
    while pa != pb:
        pa >>= 1
        pb >>= 1
        la -= 1
    return NodeId(la, pa)


def _role(v: NodeId, w: NodeId) -> str:
    if v == w:
        return "self"
    d = v.level - w.level
    if d > 0 and v.position >> d == w.position:
        return "left" if (v.position >> (d - 1)) & 1 == 0 else "right"
    return "out"


_EVEN = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}


def orientation_from_tree(shape: TreeShape, u1: NodeId, u2: NodeId, u3: NodeId) -> Orientation:
    """Orientation of the labels of three nodes under any separating labeling.

    Let ``w`` be the deepest node whose subtree holds two of the three.
    The ccw-ordered triple is then (left, right, outside) or (left, right,
    w) by internal separation at ``w``, and (left, w, outside) or (w,
    right, outside) by external separation.
    """
    nodes = (u1, u2, u3)
    if len(set(nodes)) != 3 or not all(shape.is_labeled(u) for u in nodes):
        raise ValueError("three distinct labeled nodes required")
    w = max((_lca(u1, u2), _lca(u1, u3), _lca(u2, u3)), key=lambda v: v.level)
    roles = {_role(u, w): t for t, u in enumerate(nodes)}
    if "left" in roles and "right" in roles:
        third = roles.get("out", roles.get("self"))
        ccw = (roles["left"], roles["right"], third)
    elif "left" in roles:
        ccw = (roles["left"], roles["self"], roles["out"])
    else:
        ccw = (roles["self"], roles["right"], roles["out"])
    # ccw lists input slots; an even permutation of (0, 1, 2) keeps the sign
    return Orientation.COUNTERCLOCKWISE if ccw in _EVEN else Orientation.CLOCKWISE
