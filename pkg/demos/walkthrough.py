"""
Small drawings, their layers and the triangle test
==================================================

Builds the smallest nested almost convex sets, peels them, and checks the
definition by brute force. Pictures go to the directory given on the
command line (default: the current one).
"""
import sys
from itertools import combinations
from pathlib import Path

from nacset.decider import decide
from nacset.generator import generate
from nacset.geometry import point_in_triangle_strict
from nacset.oracle import naive_check
from nacset.render import svg_document

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

for n in (2, 4, 6, 14):
    d = generate(n)
    layers = d.labeling.layers
    print(f"n={n} {d.shape.kind.name.lower()} k={d.shape.k} bound={d.grid_bound}")
    for j, layer in enumerate(layers.as_tuples(), start=1):
        print(f"  layer {j}: {layer}")
    (out / f"drawing_{n}.svg").write_text(svg_document(layers, d.labeling))

# every triangle on the outer layer of the 6 point set holds one inner point
d = generate(6)
inner, outer = d.labeling.layers.as_tuples()
for tri in combinations(outer, 3):
    inside = [p for p in inner if point_in_triangle_strict(p, *tri)]
    print(tri, "->", inside)

# move one inner point and both checks notice
moved = [(30, 29) if p == (6, 50) else p for p in d.as_tuples()]
print("definition:", naive_check(moved).passed, naive_check(moved).witness)
v = decide(moved)
print("decider:", v.reason.value, v.witness.points)
