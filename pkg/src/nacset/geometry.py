"""Exact integer primitives: orientation, strict triangle containment,
convex hull and onion peeling.

Points are ``(x, y)`` tuples of Python ints, or ``(n, 2)`` int64 arrays for
bulk work. Scalar predicates use Python integers and are exact for any
input; the array paths require |coordinate| < 2**62.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels

COORD_LIMIT = 1 << 62

Point = tuple[int, int]


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1

    def reversed(self) -> "Orientation":
        return Orientation(-int(self))


class DegenerateTriangle(ValueError):
    pass


class DuplicatePoints(ValueError):
    def __init__(self, point):
        super().__init__(f"duplicate point {point}")
        self.point = point


class DegenerateHull(ValueError):
    """Three points of a hull boundary are collinear."""

    def __init__(self, triple):
        super().__init__(f"collinear hull points {triple}")
        self.triple = triple


class LayerSizeMismatch(ValueError):
    """A convex layer does not have the required size.

    ``layer`` counts from the outside (0 = hull of the whole set).
    """

    def __init__(self, layer: int, observed: int, expected: int):
        super().__init__(
            f"layer {layer} (from outside) has {observed} points, expected {expected}")
        self.layer = layer
        self.observed = observed
        self.expected = expected


def cross(a: Point, b: Point, c: Point) -> int:
    """(b - a) x (c - a)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    v = cross(a, b, c)
    if v > 0:
        return Orientation.COUNTERCLOCKWISE
    if v < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def point_in_triangle_strict(p: Point, a: Point, b: Point, c: Point) -> bool:
    """True iff ``p`` lies in the open triangle ``abc`` (either winding)."""
    s = cross(a, b, c)
    if s == 0:
        raise DegenerateTriangle(f"collinear triangle {a}, {b}, {c}")
    if s < 0:
        b, c = c, b
    return cross(a, b, p) > 0 and cross(b, c, p) > 0 and cross(c, a, p) > 0


def as_point_array(points) -> np.ndarray:
    """Validate and convert to an ``(n, 2)`` int64 array.

    Raises ``TypeError`` on non-integer data and ``ValueError`` when a
    coordinate is outside the open interval (-2**62, 2**62).
    """
    if isinstance(points, np.ndarray) and points.dtype.kind in "iu":
        arr = points.reshape(-1, 2) if points.size else np.empty((0, 2), np.int64)
        if arr.dtype != np.int64:
            if arr.dtype.kind == "u" and arr.size and arr.max() >= COORD_LIMIT:
                raise ValueError("coordinate out of range")
            arr = arr.astype(np.int64)
        if arr.size and ((arr <= -COORD_LIMIT) | (arr >= COORD_LIMIT)).any():
            raise ValueError("coordinate out of range")
        return np.ascontiguousarray(arr)
    pts = list(points)
    for p in pts:
        if len(p) != 2:
            raise ValueError(f"not a planar point: {p!r}")
        for v in p:
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise TypeError(f"coordinate {v!r} is not an integer")
            if not -COORD_LIMIT < int(v) < COORD_LIMIT:
                raise ValueError(f"coordinate {v} out of range")
    if not pts:
        return np.empty((0, 2), np.int64)
    return np.array([(int(x), int(y)) for x, y in pts], dtype=np.int64)


def lex_sort(arr: np.ndarray) -> np.ndarray:
    """Sort rows by (x, y); raises ``DuplicatePoints`` on repeats."""
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    s = arr[order]
    if len(s) > 1:
        same = (s[1:, 0] == s[:-1, 0]) & (s[1:, 1] == s[:-1, 1])
        if same.any():
            i = int(np.flatnonzero(same)[0])
            raise DuplicatePoints((int(s[i, 0]), int(s[i, 1])))
    return s


def to_tuples(arr: np.ndarray) -> list[Point]:
    return [(int(x), int(y)) for x, y in arr.tolist()]


class Hull(NamedTuple):
    vertices: list[Point]
    degenerate: bool


def convex_hull(points: Iterable[Point]) -> Hull:
    """Strict hull vertices, counterclockwise from the lexicographic minimum.

    Points lying on a hull edge are not vertices; their presence sets the
    ``degenerate`` flag.
    """
    arr = as_point_array(points)
    if len(arr) == 0:
        raise ValueError("convex hull of an empty set")
    s = lex_sort(arr)
    idx, flat = _kernels.hull(np.ascontiguousarray(s[:, 0]), np.ascontiguousarray(s[:, 1]))
    return Hull(to_tuples(s[idx]), bool(flat))


@dataclass(frozen=True, eq=False)
class LayerDecomposition:
    """Convex layers, innermost first, each a ccw ``(m, 2)`` int64 array
    starting at its lexicographically least point."""

    layers: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.layers)

    def __getitem__(self, j: int) -> np.ndarray:
        return self.layers[j]

    @property
    def sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def as_tuples(self) -> list[list[Point]]:
        return [to_tuples(layer) for layer in self.layers]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LayerDecomposition) or len(self) != len(other):
            return False
        return all(np.array_equal(a, b) for a, b in zip(self.layers, other.layers))


def canonical_rotation(layer: np.ndarray) -> int:
    """Index of the lexicographically least row."""
    xs = layer[:, 0]
    cand = np.flatnonzero(xs == xs.min())
    return int(cand[np.argmin(layer[cand, 1])])


def peel_sorted(s: np.ndarray, expected_sizes: Sequence[int] | None = None) -> LayerDecomposition:
    """Onion-peel points already sorted by ``lex_sort``."""
    xs = np.ascontiguousarray(s[:, 0])
    ys = np.ascontiguousarray(s[:, 1])
    want = np.asarray(list(expected_sizes) if expected_sizes else [], dtype=np.int64)
    status, order, starts, nlayers, info = _kernels.peel(xs, ys, want)
    if status == 1:
        raise DegenerateHull(tuple(to_tuples(s[info])))
    if status == 2:
        raise LayerSizeMismatch(int(info[0]), int(info[1]), int(info[2]))
    layers = tuple(s[order[starts[t]:starts[t + 1]]] for t in range(nlayers - 1, -1, -1))
    return LayerDecomposition(layers)


def convex_layers(points, expected_sizes: Sequence[int] | None = None) -> LayerDecomposition:
    """Full onion decomposition, innermost layer first.

    ``expected_sizes`` (outermost first) makes peeling stop at the first
    layer of the wrong size with ``LayerSizeMismatch``. Collinear points on
    any hull raise ``DegenerateHull``.
    """
    arr = as_point_array(points)
    if len(arr) == 0:
        return LayerDecomposition(())
    return peel_sorted(lex_sort(arr), expected_sizes)
