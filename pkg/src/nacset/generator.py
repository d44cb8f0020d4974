"""Integer drawings of nested almost convex sets.

Every node of T1(k) gets a corner ``(q, o, p)``; the root corner spans the
quadrant with legs of length ``2 * 5**(k+1)`` and each child corner is cut
from its parent at ratios 1/5 and 2/5 along the legs. Support points sit at
ratio 1/5 on the leaf corners, and a node is labeled by the midpoint of the
first and last support points below it. All arithmetic is exact integer
division: level-``j`` corner coordinates are multiples of ``2 * 5**(k+1-j)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from ._kernels import drawing_points, leaf_support, split_corners
from .geometry import LayerDecomposition, Orientation, Point, orientation
from .tree import Kind, Labeling, TreeShape, admissible_neighbours, tree_shape_for

# 2 * 5**(k+1) must stay below 2**62 (the coordinate envelope)
MAX_DEPTH = 25


class InadmissibleCardinality(ValueError):
    def __init__(self, n: int):
        below, above = admissible_neighbours(n) if n >= 1 else (None, 1)
        near = [m for m in (below, above) if m is not None]
        super().__init__(
            f"no nested almost convex set has {n} points; "
            f"nearest admissible: {', '.join(map(str, near))}")
        self.n = n
        self.nearest = near


class Corner(NamedTuple):
    q: Point
    o: Point
    p: Point

    def is_proper(self) -> bool:
        """The ccw angle at ``o`` from ``op`` to ``oq`` is in (0, pi)."""
        return orientation(self.o, self.p, self.q) is Orientation.COUNTERCLOCKWISE


def _along(o: Point, end: Point, num: int, den: int) -> Point:
    if not 0 <= num <= den or den <= 0:
        raise ValueError(f"ratio {num}/{den} outside [0, 1]")
    out = []
    for a, b in zip(o, end):
        t = num * (b - a)
        if t % den:
            raise ArithmeticError(f"{num}/{den} of {b - a} is not an integer")
        out.append(a + t // den)
    return tuple(out)


def left_point(c: Corner, num: int, den: int) -> Point:
    """Point of segment ``oq`` at ``num/den`` of its length from ``o``."""
    return _along(c.o, c.q, num, den)


def right_point(c: Corner, num: int, den: int) -> Point:
    """Point of segment ``op`` at ``num/den`` of its length from ``o``."""
    return _along(c.o, c.p, num, den)


def corner_children(c: Corner) -> tuple[Corner, Corner]:
    l1, r1 = left_point(c, 1, 5), right_point(c, 1, 5)
    return (Corner(left_point(c, 2, 5), l1, r1),
            Corner(l1, r1, right_point(c, 2, 5)))


def cj_ratio(j: int, k: int) -> Fraction:
    """Ratio along the legs of a level-``j`` corner hitting its first and
    last support points: (1 - 5**(j-k-1)) / 4."""
    if not 0 <= j <= k:
        raise ValueError(f"level {j} outside 0..{k}")
    return (1 - Fraction(1, 5 ** (k + 1 - j))) / 4


class Construction(NamedTuple):
    """Raw recursion output for T1(k).

    ``corners[j]`` is a ``(2**j, 3, 2)`` array of (q, o, p) per level-``j``
    node, ``support`` the ``2**(k+1)`` support points left to right, and
    ``labels[j]`` the level-``j`` midpoints in node order (``labels[0]`` is
    the unused root midpoint).
    """

    k: int
    corners: list[np.ndarray]
    support: np.ndarray
    labels: list[np.ndarray]


def construct(k: int) -> Construction:
    if not 1 <= k <= MAX_DEPTH:
        raise ValueError(f"depth must be in 1..{MAX_DEPTH}")
    size = 2 * 5 ** (k + 1)
    root = np.array([[[0, size], [0, 0], [size, 0]]], dtype=np.int64)
    corners = [root]
    for j in range(k):
        step = 2 * 5 ** (k + 1 - j)
        child, ok = split_corners(corners[-1], step)
        if not ok:
            raise ArithmeticError(f"level {j} corner not divisible by {step}")
        corners.append(child)
    support, ok = leaf_support(corners[-1])
    if not ok:
        raise ArithmeticError("leaf corner not divisible by 10")
    return Construction(k, corners, support, _midpoints(support, k))


def _midpoints(support: np.ndarray, k: int) -> list[np.ndarray]:
    # first and last support point below each node, halved level by level
    # with contiguous copies so that no pass reads with a large stride
    first, last = support[0::2], support[1::2]
    labels = [None] * (k + 1)
    for j in range(k, -1, -1):
        labels[j] = (first + last) // 2
        first = np.ascontiguousarray(first[0::2])
        last = np.ascontiguousarray(last[1::2])
    return labels


@dataclass(frozen=True, eq=False)
class Drawing:
    """A generated point set with its labeling.

    ``points`` lists the layers innermost first, each counterclockwise from
    its lexicographically least point.
    """

    shape: TreeShape
    points: np.ndarray
    labeling: Labeling

    @property
    def grid_bound(self) -> int:
        return self.shape.grid_bound

    @property
    def n(self) -> int:
        return len(self.points)

    def max_abs(self) -> int:
        return int(np.abs(self.points).max()) if len(self.points) else 0

    def as_tuples(self) -> list[Point]:
        return [(int(x), int(y)) for x, y in self.points.tolist()]


def _drawing(shape: TreeShape) -> Drawing:
    """Labels written straight into the final point array; the corner
    levels are never materialized (``construct`` keeps them)."""
    k = shape.k
    counts = np.array([shape.width(j) for j in range(1, k + 1)], dtype=np.int64)
    points, rot, ok = drawing_points(k, shape.grid_bound, counts)
    if not ok:
        raise ArithmeticError("inexact corner split")
    ends = np.cumsum(counts)
    layers = tuple(points[e - w:e] for e, w in zip(ends, counts))
    offsets = tuple(int(-s % w) for s, w in zip(rot, counts))
    return Drawing(shape, points, Labeling(shape, LayerDecomposition(layers), offsets))


def generate_type1(k: int) -> Drawing:
    """The ``2**(k+1) - 2`` point drawing of size ``2 * 5**(k+1)``."""
    if not 1 <= k <= MAX_DEPTH:
        raise ValueError(f"depth must be in 1..{MAX_DEPTH}")
    return _drawing(TreeShape(Kind.TYPE1, k))


def generate_type2(k: int) -> Drawing:
    """The ``3 * 2**(k-1) - 2`` point drawing.

    Taken from the type-1 run at the same depth: the root's left child
    becomes the root, and the right child's left subtree becomes its third
    child. In node ids that keeps the first ``3 * 2**(j-2)`` nodes of every
    level ``j >= 2``.
    """
    if not 1 <= k <= MAX_DEPTH:
        raise ValueError(f"depth must be in 1..{MAX_DEPTH}")
    return _drawing(TreeShape(Kind.TYPE2, k))


def generate(n: int) -> Drawing:
    shape = tree_shape_for(n)
    if shape is None:
        raise InadmissibleCardinality(n)
    if shape.kind is Kind.TYPE1:
        return generate_type1(shape.k)
    return generate_type2(shape.k)
