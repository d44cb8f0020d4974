"""Brute-force ground truth.

Everything here is deliberately slow and literal: convex layers by gift
wrapping, the defining triangle-count condition, full-quantifier labeling
properties and order-type comparison under a given bijection. None of it
touches the compiled kernels, so it can referee them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from .decider import Reason, Verdict
from .geometry import LayerDecomposition, Orientation, Point, cross, point_in_triangle_strict
from .tree import (Kind, Labeling, NodeId, descendant_range, orientation_from_tree,
                   tree_shape_for)

DEFAULT_CAP = 64


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class PropertyReport:
    name: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def _pts(points: Iterable) -> list[Point]:
    out = [(int(x), int(y)) for x, y in points]
    if len(set(out)) != len(out):
        raise ValueError("duplicate points")
    return out


def _capped(points, cap: int) -> list[Point]:
    pts = _pts(points)
    if len(pts) > cap:
        raise CapExceeded(f"{len(pts)} points exceed the brute-force cap {cap}")
    return pts


def _inside(p: Point, a: Point, b: Point, c: Point) -> bool:
    return point_in_triangle_strict(p, a, b, c)


def hull_boundary(points: Sequence[Point]) -> list[Point]:
    """Every point on the closed hull boundary, ccw from the lexicographic
    minimum. Uses gift wrapping."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    start = pts[0]
    if all(cross(start, pts[-1], p) == 0 for p in pts):
        return pts
    verts = [start]
    cur = start
    while True:
        cand = None
        for p in pts:
            if p == cur:
                continue
            if cand is None:
                cand = p
                continue
            s = cross(cur, cand, p)
            # prefer the most clockwise, then the farthest
            if s < 0 or (s == 0 and _d2(cur, p) > _d2(cur, cand)):
                cand = p
        if cand == start:
            break
        verts.append(cand)
        cur = cand
    out = []
    for a, b in zip(verts, verts[1:] + verts[:1]):
        out.append(a)
        between = [p for p in pts if p != a and p != b and cross(a, b, p) == 0
                   and _on_segment(a, b, p)]
        out.extend(sorted(between, key=lambda p: _d2(a, p)))
    return out


def _d2(a: Point, b: Point) -> int:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def onion_layers(points: Iterable[Point]) -> list[list[Point]]:
    """Closed-boundary convex layers, innermost first."""
    rest = set(_pts(points))
    out = []
    while rest:
        layer = hull_boundary(list(rest))
        out.append(layer)
        rest -= set(layer)
    return out[::-1]


def check_general_position(points, cap: int = DEFAULT_CAP) -> tuple[Point, Point, Point] | None:
    """First collinear triple by input index order (i < j < k), or None.

    Brute force up to ``cap`` points, hashed directions above it.
    """
    pts = _pts(points)
    n = len(pts)
    if n <= cap:
        for i, j, k in combinations(range(n), 3):
            if cross(pts[i], pts[j], pts[k]) == 0:
                return pts[i], pts[j], pts[k]
        return None
    for i in range(n - 2):
        xi, yi = pts[i]
        seen: dict[tuple[int, int], int] = {}
        best = None
        for j in range(i + 1, n):
            dx, dy = pts[j][0] - xi, pts[j][1] - yi
            g = gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            first = seen.setdefault((dx, dy), j)
            if first != j:
                pair = (first, j)
                if best is None or pair < best:
                    best = pair
        if best is not None:
            return pts[i], pts[best[0]], pts[best[1]]
    return None


def naive_check(points, cap: int = DEFAULT_CAP) -> PropertyReport:
    """The defining conditions, checked literally in O(n^4)."""
    name = "definition"
    pts = _capped(points, cap)
    layers = onion_layers(pts)
    prefix: list[Point] = []
    for j, layer in enumerate(layers, start=1):
        old = list(prefix)
        prefix = old + layer
        # new triples only: earlier prefixes were already clean
        for t in range(len(layer)):
            c = layer[t]
            for a, b in combinations(prefix[:len(old) + t], 2):
                if cross(a, b, c) == 0:
                    return PropertyReport(name, False, {"condition": "general-position",
                                                        "layer": j, "triple": [a, b, c]})
        m = len(layer)
        if m >= 3:
            for t in range(m):
                a, b, c = layer[t - 1], layer[t], layer[(t + 1) % m]
                if cross(a, b, c) <= 0:
                    return PropertyReport(name, False, {"condition": "hull-vertex",
                                                        "layer": j, "point": b})
    if layers and len(layers[0]) > 2:
        return PropertyReport(name, False, {"condition": "innermost-size",
                                            "layer": 1, "size": len(layers[0])})
    prefix = list(layers[0]) if layers else []
    for j in range(1, len(layers)):
        for tri in combinations(layers[j], 3):
            inside = [p for p in prefix if _inside(p, *tri)]
            if len(inside) != 1:
                return PropertyReport(name, False, {"condition": "triangle-count",
                                                    "layer": j + 1, "triangle": list(tri),
                                                    "inside": inside})
        prefix += layers[j]
    return PropertyReport(name, True)


def check_nested(labeling: Labeling) -> PropertyReport:
    """Level ``j`` labels, left to right, are the ccw cycle of layer ``j``."""
    name = "nested"
    layers = onion_layers(labeling.points)
    if len(layers) != labeling.shape.k:
        return PropertyReport(name, False, {"layers": len(layers), "levels": labeling.shape.k})
    for j, layer in enumerate(layers, start=1):
        labels = [(int(x), int(y)) for x, y in labeling.level_labels(j).tolist()]
        if len(labels) != len(layer) or labels[0] not in layer:
            return PropertyReport(name, False, {"level": j})
        s = layer.index(labels[0])
        if labels != layer[s:] + layer[:s]:
            return PropertyReport(name, False, {"level": j, "labels": labels, "layer": layer})
    return PropertyReport(name, True)


def _child_pairs(labeling: Labeling, u: NodeId) -> list[tuple[NodeId, NodeId]]:
    kids = labeling.shape.children(u)
    if len(kids) == 3:
        return [(kids[t], kids[(t + 1) % 3]) for t in range(3)]
    return [tuple(kids)] if kids else []


def is_adoptable(p: Point, q1: Point, q2: Point, layer: Sequence[Point]) -> bool:
    """``p`` is strictly inside every triangle ``q1 q2 q3``, q3 in the layer."""
    for q3 in layer:
        if q3 in (q1, q2):
            continue
        if cross(q1, q2, q3) == 0 or not _inside(p, q1, q2, q3):
            return False
    return True


def check_adoptable(labeling: Labeling) -> PropertyReport:
    name = "adoptable"
    for u, x in labeling.items():
        for a, b in _child_pairs(labeling, u):
            q1, q2 = labeling.label(a), labeling.label(b)
            layer = [(int(s), int(t)) for s, t in labeling.level_labels(a.level).tolist()]
            if not is_adoptable(x, q1, q2, layer):
                return PropertyReport(name, False, {"node": list(u), "point": x,
                                                    "pair": [q1, q2]})
    return PropertyReport(name, True)


def check_well_laid_naive(labeling: Labeling) -> PropertyReport:
    """Each label lies in both outer triangles at the ends of its descendant
    arc. The type-2 root owns the whole outer layer, so it is tested against
    the arc of every pair of cyclically consecutive children instead."""
    name = "well-laid"
    shape = labeling.shape
    k = shape.k
    outer = [(int(s), int(t)) for s, t in labeling.level_labels(k).tolist()]
    w = len(outer)
    for u, x in labeling.items():
        if u.level == k:
            continue
        if shape.kind is Kind.TYPE2 and u == shape.root:
            s = w // 3
            arcs = [(t * s, (t + 2) * s - 1) for t in range(3)]
        else:
            r = descendant_range(shape, u, k)
            arcs = [(r.first_index, r.last_index)]
        for f, l in arcs:
            first, last = outer[f % w], outer[l % w]
            prev, nxt = outer[(f - 1) % w], outer[(l + 1) % w]
            for tri in ((prev, first, last), (first, last, nxt)):
                if cross(*tri) == 0 or not _inside(x, *tri):
                    return PropertyReport(name, False, {"node": list(u), "point": x,
                                                        "triangle": list(tri)})
    return PropertyReport(name, True)


def check_internal_separation(labeling: Labeling, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Points outside a node's subtree lie left of every line from its left
    child's closed subtree to its right child's.

    Around the three-way type-2 root every cyclically consecutive pair of
    children plays the roles of left and right.
    """
    name = "internal-separation"
    everything = _capped(labeling.points, cap)
    shape = labeling.shape
    nodes = list(shape.nodes())
    if shape.kind is Kind.TYPE1:
        nodes.insert(0, shape.root)
    for u in nodes:
        for a_node, b_node in _child_pairs(labeling, u):
            left = labeling.subtree(a_node)
            right = labeling.subtree(b_node)
            if len(shape.children(u)) == 3:
                inner = set(left) | set(right)
            else:
                inner = set(labeling.subtree(u, strict=True))
            rest = [p for p in everything if p not in inner]
            for a in left:
                for b in right:
                    for c in rest:
                        if cross(a, b, c) <= 0:
                            return PropertyReport(name, False, {"node": list(u),
                                                                "line": [a, b], "point": c})
    return PropertyReport(name, True)


def check_external_separation(labeling: Labeling, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Points outside a node's closed subtree lie left of every line from
    its left subtree into the node and from the node into its right
    subtree."""
    name = "external-separation"
    everything = _capped(labeling.points, cap)
    for u, x in labeling.items():
        kids = labeling.shape.children(u)
        if len(kids) != 2:
            continue
        closed = set(labeling.subtree(u))
        rest = [p for p in everything if p not in closed]
        for a in labeling.subtree(kids[0]):
            for c in rest:
                if cross(a, x, c) <= 0:
                    return PropertyReport(name, False, {"node": list(u), "line": [a, x], "point": c})
        for b in labeling.subtree(kids[1]):
            for c in rest:
                if cross(x, b, c) <= 0:
                    return PropertyReport(name, False, {"node": list(u), "line": [x, b], "point": c})
    return PropertyReport(name, True)


def same_order_type(a, b, bijection: Sequence[int] | None = None,
                    cap: int = DEFAULT_CAP) -> PropertyReport:
    """Whether ``a[i] -> b[bijection[i]]`` preserves every orientation."""
    name = "order-type"
    pa, pb = _capped(a, cap), _capped(b, cap)
    if len(pa) != len(pb):
        raise ValueError("point sets differ in size")
    f = list(range(len(pa))) if bijection is None else list(bijection)
    if sorted(f) != list(range(len(pa))):
        raise ValueError("not a bijection")
    for i, j, k in combinations(range(len(pa)), 3):
        sa = cross(pa[i], pa[j], pa[k])
        sb = cross(pb[f[i]], pb[f[j]], pb[f[k]])
        if (sa > 0) != (sb > 0) or (sa == 0) != (sb == 0):
            return PropertyReport(name, False, {"triple": [i, j, k]})
    return PropertyReport(name, True)


def labeling_bijection(src: Labeling, dst: Labeling) -> tuple[list[Point], list[Point]]:
    """The two label lists aligned node by node."""
    if src.shape != dst.shape:
        raise ValueError("labelings have different shapes")
    nodes = list(src.shape.nodes())
    return [src.label(u) for u in nodes], [dst.label(u) for u in nodes]


def adoptable_labelings(points, cap: int = DEFAULT_CAP) -> Iterator[Labeling]:
    """Every nested, adoptable labeling, found by exhaustive search.

    Layers come from gift wrapping. Offsets are fixed level by level, and a
    candidate survives only if every node one level up adopts its children
    under it, so the search stays tiny even though it is exhaustive.
    """
    pts = _capped(points, cap)
    shape = tree_shape_for(len(pts))
    if shape is None:
        return
    layers = onion_layers(pts)
    if [len(layer) for layer in layers] != shape.layer_sizes():
        return
    decomp = LayerDecomposition(tuple(np.array(layer, dtype=np.int64).reshape(-1, 2)
                                      for layer in layers))

    def adopts(lab: Labeling, j: int) -> bool:
        below = layers[j]
        for i in range(shape.width(j)):
            u = NodeId(j, i)
            for a, b in _child_pairs(lab, u):
                if not is_adoptable(lab.label(u), lab.label(a), lab.label(b), below):
                    return False
        return True

    def extend(fixed: tuple[int, ...]) -> Iterator[Labeling]:
        j = len(fixed)
        if j == shape.k:
            yield Labeling(shape, decomp, fixed)
            return
        for off in range(shape.width(j + 1)):
            trial = fixed + (off,)
            lab = Labeling(shape, decomp, trial + (0,) * (shape.k - j - 1))
            if j == 0 or adopts(lab, j):
                yield from extend(trial)

    yield from extend(())


def find_labeling(points, cap: int = DEFAULT_CAP) -> Labeling | None:
    """A nested, adoptable, well-laid labeling, or None."""
    for lab in adoptable_labelings(points, cap):
        if check_well_laid_naive(lab):
            return lab
    return None


def property_suite(labeling: Labeling, cap: int = DEFAULT_CAP) -> list[PropertyReport]:
    return [check_nested(labeling), check_adoptable(labeling),
            check_well_laid_naive(labeling), check_internal_separation(labeling, cap),
            check_external_separation(labeling, cap)]


def _admissible(n: int) -> bool:
    m = 4
    while m <= n + 2:
        if m == n + 2:
            return True
        m *= 2
    m = 3
    while m <= n + 2:
        if m == n + 2:
            return True
        m *= 2
    return False


def confirm_witness(points, verdict: Verdict, cap: int = DEFAULT_CAP) -> bool:
    """Re-check a rejection's witness with one brute-force predicate."""
    if verdict.accepted:
        raise ValueError("accepted verdicts carry no witness")
    pts = _pts(points)
    have = set(pts)
    w = verdict.witness
    reason = verdict.reason
    if not all(tuple(p) in have for p in w.points):
        return False
    if reason is Reason.INVALID_CARDINALITY:
        return w.detail["n"] == len(pts) and not _admissible(len(pts))
    if reason is Reason.DEGENERATE_COLLINEARITY:
        a, b, c = w.points
        return len({a, b, c}) == 3 and cross(a, b, c) == 0
    if len(pts) > cap:
        raise CapExceeded(f"{len(pts)} points exceed the brute-force cap {cap}")
    if reason is Reason.LAYER_SIZE_MISMATCH:
        outer_first = onion_layers(pts)[::-1]
        t = w.detail["layer"]
        size = len(outer_first[t]) if t < len(outer_first) else 0
        return size == w.detail["observed"] != w.detail["expected"]
    if reason is Reason.NO_ADOPTABLE_ANCHOR:
        layers = onion_layers(pts)
        j = w.detail["level"]
        outer = layers[j]
        m = len(outer)
        return w.points[0] in layers[j - 1] and not any(
            is_adoptable(w.points[0], outer[t], outer[(t + 1) % m], outer) for t in range(m))
    if reason is Reason.PAIRING_MISALIGNED:
        layers = onion_layers(pts)
        p, *qs = w.points
        if len(qs) == 3:
            return not _inside(p, *qs)
        return not is_adoptable(p, qs[0], qs[1], layers[w.detail["level"]])
    if reason is Reason.NOT_WELL_LAID:
        x, a, b = w.points
        if cross(a, b, x) > 0 or naive_check(pts, cap):
            return False
        u, va, vb = NodeId(*w.detail["node"]), *(NodeId(*c) for c in w.detail["chord"])
        for lab in adoptable_labelings(pts, cap):
            if (lab.label(u), lab.label(va), lab.label(vb)) == (x, a, b):
                return orientation_from_tree(lab.shape, va, vb, u) is Orientation.COUNTERCLOCKWISE
        return False
    raise ValueError(f"unknown reason {reason}")
