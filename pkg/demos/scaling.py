"""
Timing generate and decide
==========================

Doubling the size should roughly double both running times. Pass the
largest exponent q (n = 2**q - 2) as an argument; the default is 20.
"""
import sys
import time

from nacset.decider import decide
from nacset.generator import generate

top = int(sys.argv[1]) if len(sys.argv) > 1 else 20


def best(fn, arg, repeat=5):
    fn(arg)
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(arg)
        ts.append(time.perf_counter() - t0)
    return min(ts)


print(f"{'n':>9} {'generate ms':>12} {'decide ms':>10}  stages")
prev = None
for q in range(11, top + 1):
    n = 2 ** q - 2
    pts = generate(n).points
    g, d = best(generate, n), best(decide, pts)
    stages = " ".join(f"{k}={v * 1e3:.1f}" for k, v in decide(pts).timings.items())
    ratio = f"  x{g / prev[0]:.2f} x{d / prev[1]:.2f}" if prev else ""
    print(f"{n:>9} {g * 1e3:>12.2f} {d * 1e3:>10.2f}  {stages}{ratio}")
    prev = (g, d)
