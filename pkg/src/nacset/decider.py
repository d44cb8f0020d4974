"""O(n log n) recognition of nested almost convex sets.

Four checks in order: admissible cardinality, convex layer sizes (peeling
aborts at the first wrong layer), adoptable pairing between consecutive
layers, and the well-laid condition checked against every deeper layer
(a linear number of orientation tests). The first
failure becomes a ``Reject`` carrying a witness that the brute-force
oracle can confirm on its own.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import _kernels
from .geometry import (DegenerateHull, LayerDecomposition, LayerSizeMismatch, Point,
                       as_point_array, cross, lex_sort, peel_sorted, to_tuples)
from .tree import Kind, Labeling, NodeId, TreeShape, tree_shape_for


class Reason(enum.Enum):
    INVALID_CARDINALITY = "invalid-cardinality"
    DEGENERATE_COLLINEARITY = "degenerate-collinearity"
    LAYER_SIZE_MISMATCH = "layer-size-mismatch"
    NO_ADOPTABLE_ANCHOR = "no-adoptable-anchor"
    PAIRING_MISALIGNED = "pairing-misaligned"
    NOT_WELL_LAID = "not-well-laid"


@dataclass(frozen=True)
class Witness:
    """Offending points plus whatever indices locate them.

    Per reason: collinearity -> the three points; layer size -> no points,
    ``layer`` (from outside), ``observed``, ``expected``; no anchor -> the
    inner point, ``level``; misaligned -> inner point then the two outer
    points, ``level``, ``index``; not well laid -> the label then the
    chord it should lie left of, ``node``, ``layer`` of the chord and the
    chord's ``chord`` node ids.
    """

    points: tuple[Point, ...] = ()
    detail: dict[str, Any] = field(default_factory=dict)


class Rejected(Exception):
    def __init__(self, reason: Reason, witness: Witness):
        super().__init__(f"{reason.value}: {witness}")
        self.reason = reason
        self.witness = witness


@dataclass(frozen=True, eq=False)
class Verdict:
    accepted: bool
    shape: TreeShape | None = None
    labeling: Labeling | None = None
    reason: Reason | None = None
    witness: Witness | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.accepted


def check_cardinality(n: int) -> TreeShape:
    shape = tree_shape_for(n)
    if shape is None:
        raise Rejected(Reason.INVALID_CARDINALITY, Witness((), {"n": n}))
    return shape


def _degenerate(triple) -> Rejected:
    return Rejected(Reason.DEGENERATE_COLLINEARITY, Witness(tuple(triple)))


def check_layers(points, shape: TreeShape, *, presorted: bool = False) -> LayerDecomposition:
    """Peel with the shape's layer sizes, aborting on the first mismatch."""
    s = points if presorted else lex_sort(as_point_array(points))
    try:
        return peel_sorted(s, shape.layer_sizes()[::-1])
    except DegenerateHull as e:
        raise _degenerate(e.triple) from None
    except LayerSizeMismatch as e:
        raise Rejected(Reason.LAYER_SIZE_MISMATCH,
                       Witness((), {"layer": e.layer, "observed": e.observed,
                                    "expected": e.expected})) from None


def _collinear_in(p: Point, pts: list[Point]) -> tuple[Point, Point, Point]:
    for a in pts:
        for b in pts:
            if a < b and cross(a, b, p) == 0:
                return (a, b, p)
    raise AssertionError("no collinear triple found")


def build_pairing(inner: np.ndarray, outer: np.ndarray, level: int = 0) -> int:
    """Anchor offset ``r``: inner[i] adopts (outer[r + 2i], outer[r + 2i + 1]).

    ``inner`` and ``outer`` are consecutive layers in ccw order, ``inner[0]``
    being the anchor (its lexicographic minimum for canonical layers), and
    ``len(outer) == 2 * len(inner) >= 4``. ``level`` only annotates
    witnesses.
    """
    w, big = len(inner), len(outer)
    if big != 2 * w or big < 4:
        raise ValueError("outer layer must have twice as many points, at least four")
    status, r, i = _kernels.pair_scan(
        np.ascontiguousarray(inner[:, 0]), np.ascontiguousarray(inner[:, 1]),
        np.ascontiguousarray(outer[:, 0]), np.ascontiguousarray(outer[:, 1]))
    if status == 0:
        return int(r)
    p = (int(inner[i, 0]), int(inner[i, 1]))
    if status == 1:
        raise Rejected(Reason.NO_ADOPTABLE_ANCHOR, Witness((p,), {"level": level}))
    if status == 2:
        pair = to_tuples(outer[[(r + 2 * i) % big, (r + 2 * i + 1) % big]])
        raise Rejected(Reason.PAIRING_MISALIGNED,
                       Witness((p, *pair), {"level": level, "index": int(i)}))
    quad = to_tuples(outer[[(r + d) % big for d in (-1, 0, 1, 2)]])
    raise _degenerate(_collinear_in(p, quad))


def _check_bottom(layers: LayerDecomposition) -> None:
    p = tuple(int(v) for v in layers[0][0])
    a, b, c = to_tuples(layers[1])
    signs = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
    if 0 in signs:
        raise _degenerate(_collinear_in(p, [a, b, c]))
    # a hull triangle always contains the remaining point; kept as a guard
    if min(signs) < 0:
        raise Rejected(Reason.PAIRING_MISALIGNED, Witness((p, a, b, c), {"level": 1, "index": 0}))


def build_labeling(shape: TreeShape, layers: LayerDecomposition) -> Labeling:
    """Nested, adoptable labeling from canonical layers (pairing step)."""
    offsets = [0] * shape.k
    first = 1
    if shape.kind is Kind.TYPE2 and shape.k >= 2:
        _check_bottom(layers)
        first = 2
    for j in range(first, shape.k):
        r = build_pairing(layers[j - 1], layers[j], level=j)
        offsets[j] = (r + 2 * offsets[j - 1]) % len(layers[j])
    return Labeling(shape, layers, tuple(offsets))


def check_well_laid(labeling: Labeling) -> None:
    """Every label sits in the region its descendants carve out of each
    deeper layer.

    For a binary node with descendant arcs [fl..ll] (left) and [fr..lr]
    (right) on a deeper layer, and pv, nx the layer points
    just before and after, the label must lie strictly left of fl->lr,
    fr->pv and nx->ll. The three-way type-2 root must lie left of the chord
    spanning each pair of cyclically consecutive child arcs. On the
    children's layer this is the adoptable test again, and on the outermost
    layer it implies the classical well-laid triangles; the intermediate
    layers and the split point are what make the test sufficient, as the
    outermost triangles alone admit non-nested sets.
    """
    shape = labeling.shape
    layers = labeling.layers
    if shape.k < 2:
        return
    flat = np.concatenate(layers.layers)
    widths = np.array(layers.sizes, dtype=np.int64)
    starts = np.concatenate([[0], np.cumsum(widths)]).astype(np.int64)
    offsets = np.array(labeling.offsets, dtype=np.int64)
    status, j, i, m, a, b = _kernels.region_scan(
        np.ascontiguousarray(flat[:, 0]), np.ascontiguousarray(flat[:, 1]),
        shape.kind is Kind.TYPE2, widths, starts, offsets)
    if status == 0:
        return
    node = NodeId(int(j) + 1, int(i))
    x = labeling.label(node)
    pa, pb = to_tuples(flat[[a, b]])
    if status == 2:
        raise _degenerate((pa, pb, x))
    chord = [list(labeling.node_of(pa)), list(labeling.node_of(pb))]
    raise Rejected(Reason.NOT_WELL_LAID,
                   Witness((x, pa, pb), {"node": [node.level, node.position],
                                         "layer": int(m) + 1, "chord": chord}))


def decide(points) -> Verdict:
    """Decide whether ``points`` is a nested almost convex set.

    General position is assumed; collinearities met by a hull or a tested
    triangle are reported as ``degenerate-collinearity``. Raises
    ``ValueError`` on duplicate or out-of-range points.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    arr = as_point_array(points)
    s = lex_sort(arr)
    shape = None
    stage = "cardinality"
    try:
        shape = check_cardinality(len(s))
        timings[stage] = time.perf_counter() - t0
        stage, t0 = "layers", time.perf_counter()
        layers = check_layers(s, shape, presorted=True)
        timings[stage] = time.perf_counter() - t0
        stage, t0 = "pairing", time.perf_counter()
        labeling = build_labeling(shape, layers)
        timings[stage] = time.perf_counter() - t0
        stage, t0 = "well_laid", time.perf_counter()
        check_well_laid(labeling)
        timings[stage] = time.perf_counter() - t0
    except Rejected as e:
        timings[stage] = time.perf_counter() - t0
        return Verdict(False, shape, None, e.reason, e.witness, timings)
    return Verdict(True, shape, labeling, timings=timings)
