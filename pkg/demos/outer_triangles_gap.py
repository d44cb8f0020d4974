"""
Why the outermost triangles are not enough
==========================================

For this 14 point set every labeled point lies inside both triangles
formed by the outermost layer around its descendant arc, and the labeling
is nested and adoptable. Yet one triangle of the outer layer is empty, so
the set is not nested almost convex. The decider therefore tests every
deeper layer, not only the outermost one.
"""
from itertools import combinations

from nacset.decider import decide
from nacset.geometry import point_in_triangle_strict
from nacset.oracle import (adoptable_labelings, check_adoptable, check_nested, confirm_witness,
                           naive_check)
from nacset.tree import boundary_points, orientation_from_tree

pts = [(1, 308), (6, 294), (10, 281), (31, 250), (41, 219), (50, 206), (59, 192),
       (192, 59), (206, 50), (219, 41), (250, 31), (261, 15), (294, 6), (308, 1)]

lab = next(adoptable_labelings(pts))
print("nested:", check_nested(lab).passed, " adoptable:", check_adoptable(lab).passed)

k = lab.shape.k
for u, x in lab.items():
    if u.level == k:
        continue
    first, last, prev, nxt = boundary_points(lab, u, k)
    ok = point_in_triangle_strict(x, prev, first, last) and point_in_triangle_strict(x, first, last, nxt)
    print(f"node {tuple(u)} label {x} inside its two outer triangles: {ok}")

outer = lab.layers.as_tuples()[-1]
others = [p for p in pts if p not in outer]
for tri in combinations(outer, 3):
    if not any(point_in_triangle_strict(p, *tri) for p in others):
        print("empty triangle:", tri)
        break

print("definition holds:", naive_check(pts).passed)
v = decide(pts)
print("decider:", v.reason.value, "label, chord:", v.witness.points, v.witness.detail)
print("witness confirmed:", confirm_witness(pts, v))
u = lab.node_of(v.witness.points[0])
a, b = (lab.node_of(p) for p in v.witness.points[1:])
print("the tree wants the label left of the chord:", orientation_from_tree(lab.shape, a, b, u).name)
