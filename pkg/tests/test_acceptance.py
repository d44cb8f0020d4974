"""Acceptance checks. Each test prints one PASS/FAIL line, repeated in the
terminal summary under "acceptance"."""
import contextlib
import ctypes
import gc
import time
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import numpy as np

from corpus import SIZES, corpus
from nacset.decider import Reason, decide
from nacset.generator import construct, cj_ratio, generate
from nacset.geometry import orientation
from nacset.oracle import (check_external_separation, check_internal_separation, confirm_witness,
                           find_labeling, labeling_bijection, naive_check, property_suite,
                           same_order_type)
from nacset.pointfile import parse_points
from nacset.tree import orientation_from_tree, tree_shape_for

GOLDEN = Path(__file__).parent / "golden"


def _admissible_up_to(limit):
    return [n for n in range(1, limit + 1) if tree_shape_for(n) is not None]


def _suite_verdict(pts) -> bool:
    lab = find_labeling(pts)
    return lab is not None and all(property_suite(lab))


def test_grid_bound(report):
    generate(2)  # load the compiled kernels outside the timed loop
    t0 = time.perf_counter()
    bad = []
    for n in _admissible_up_to(32766):
        d = generate(n)
        bound = d.grid_bound
        if d.points.dtype.kind != "i" or len(d.points) != n or int(np.abs(d.points).max()) > bound:
            bad.append(n)
        assert bound == 2 * 5 ** (d.shape.k + 1)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 1.0
    report(1, ok, f"grid bound on every admissible n <= 32766: violations={bad} time={dt:.3f}s")
    assert ok


def test_golden_instances(report):
    expected = {
        2: [(1, 10), (10, 1)],
        6: [(6, 50), (50, 6), (1, 59), (10, 41), (41, 10), (59, 1)],
        4: [(6, 50), (1, 59), (10, 41), (41, 10)],
    }
    files = {2: "type1_k1.txt", 6: "type1_k2.txt", 4: "type2_k2.txt"}
    ok = all(generate(n).as_tuples() == parse_points((GOLDEN / files[n]).read_text()) == pts
             for n, pts in expected.items())
    report(2, ok, "golden instances n=2,6,4 match exactly")
    assert ok


def test_cj_identity(report):
    construct(1)  # load the compiled kernels outside the timed loop
    t0 = time.perf_counter()
    checked = mismatches = 0
    for k in range(1, 9):
        c = construct(k)
        y = c.support.tolist()
        for j in range(k + 1):
            cj = cj_ratio(j, k)
            assert cj == Fraction(1, 4) * (1 - Fraction(1, 5 ** (k + 1 - j)))
            span = 2 ** (k + 1 - j)
            for i, (q, o, p) in enumerate(c.corners[j].tolist()):
                first, last = y[i * span], y[(i + 1) * span - 1]
                left = tuple(o[t] + cj * (q[t] - o[t]) for t in range(2))
                right = tuple(o[t] + cj * (p[t] - o[t]) for t in range(2))
                checked += 1
                mismatches += tuple(first) != left or tuple(last) != right
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 1.0
    report(3, ok, f"endpoint ratio identity k<=8: nodes={checked} mismatches={mismatches} "
                  f"time={dt:.3f}s")
    assert ok


def test_three_way_equivalence(report):
    t0 = time.perf_counter()
    total = accepted = 0
    disagree = []
    for n in SIZES:
        for tag, pts in corpus(n):
            a = naive_check(pts).passed
            b = decide(pts).accepted
            c = _suite_verdict(pts)
            total += 1
            accepted += a
            if not a == b == c:
                disagree.append((n, tag, a, b, c))
    dt = time.perf_counter() - t0
    ok = not disagree and dt < 120
    report(4, ok, f"naive == decider == property suite on {total} sets "
                  f"({accepted} accepted): disagreements={len(disagree)} time={dt:.1f}s")
    assert ok, disagree[:5]


def test_uniqueness(report):
    t0 = time.perf_counter()
    # (a) cardinality alone settles every inadmissible size
    parabola = [(x, x * x) for x in range(1100)]
    late = []
    for n in range(1, 1100):
        if tree_shape_for(n) is None:
            v = decide(parabola[:n])
            if v.reason is not Reason.INVALID_CARDINALITY or list(v.timings) != ["cardinality"]:
                late.append(n)
    # (b) every small nested almost convex set has the generated order type
    compared = differ = 0
    for n in (4, 6):
        base = generate(n).labeling
        for _, pts in corpus(n):
            if naive_check(pts):
                src, dst = labeling_bijection(base, find_labeling(pts))
                compared += 1
                differ += not same_order_type(src, dst)
    # (c) the tree predicts every orientation of every accepted set
    triples = wrong = 0
    for n in SIZES:
        if n < 3:
            continue
        for _, pts in corpus(n):
            v = decide(pts)
            if not v.accepted:
                continue
            lab = v.labeling
            nodes = list(lab.shape.nodes())
            labels = [lab.label(u) for u in nodes]
            for a, b, c in combinations(range(len(nodes)), 3):
                triples += 1
                wrong += (orientation_from_tree(lab.shape, nodes[a], nodes[b], nodes[c])
                          != orientation(labels[a], labels[b], labels[c]))
    dt = time.perf_counter() - t0
    ok = not late and compared > 0 and differ == 0 and triples > 0 and wrong == 0 and dt < 60
    report(5, ok, f"one order type: inadmissible not settled by cardinality={late}; "
                  f"n=4,6 sets compared={compared} differing={differ}; "
                  f"tree orientations checked={triples} wrong={wrong}; time={dt:.1f}s")
    assert ok


def test_separations(report):
    t0 = time.perf_counter()
    failures = []
    sizes = _admissible_up_to(62)
    for n in sizes:
        lab = generate(n).labeling
        for check in (check_internal_separation, check_external_separation):
            r = check(lab)
            if not r:
                failures.append((n, r.name, r.witness))
    dt = time.perf_counter() - t0
    ok = not failures and dt < 60
    report(6, ok, f"internal and external separation on generate(n), n in {sizes}: "
                  f"violations={len(failures)} time={dt:.1f}s")
    assert ok, failures[:3]


def test_witness_validity(report):
    extras = [
        [(x, x * x) for x in range(5)],
        [(x, x * x) for x in range(100)],
        [(0, 0), (4, 0), (2, 0), (1, 3), (3, 3), (2, 1)],
        [(0, 0), (2, 0), (3, 2), (2, 4), (0, 4), (-1, 2)],
    ]
    sets = [pts for n in SIZES for _, pts in corpus(n)] + extras
    rejected = confirmed = 0
    reasons = set()
    for pts in sets:
        v = decide(pts)
        if v.accepted:
            continue
        rejected += 1
        reasons.add(v.reason.value)
        confirmed += confirm_witness(pts, v)
    ok = rejected > 0 and confirmed == rejected
    report(8, ok, f"rejection witnesses confirmed {confirmed}/{rejected} "
                  f"over reasons {sorted(reasons)}")
    assert ok


M_TRIM_THRESHOLD, M_MMAP_MAX = -1, -4


@contextlib.contextmanager
def _steady_heap():
    """Keep freed memory in the process while timing.

    glibc serves a large request from fresh zeroed pages or from the
    existing heap depending on thresholds that move with the allocation
    history, so the page-fault share of a call jumps between sizes. With
    mmap off and trimming disabled every size runs on warm memory. Other
    platforms are timed as they are.
    """
    try:
        libc = ctypes.CDLL("libc.so.6")
        libc.mallopt(M_MMAP_MAX, 0)
        libc.mallopt(M_TRIM_THRESHOLD, 1 << 30)
    except (OSError, AttributeError):
        libc = None
    try:
        yield
    finally:
        if libc is not None:
            # glibc defaults
            libc.mallopt(M_MMAP_MAX, 65536)
            libc.mallopt(M_TRIM_THRESHOLD, 128 * 1024)


def _best_time(fn, arg, budget=0.3, least=5):
    """Smallest wall time over repeated calls."""
    best, spent, runs = float("inf"), 0.0, 0
    gc.disable()
    try:
        while runs < least or spent < budget:
            t0 = time.perf_counter()
            fn(arg)
            dt = time.perf_counter() - t0
            best, spent, runs = min(best, dt), spent + dt, runs + 1
    finally:
        gc.enable()
    return best


def test_scaling(report):
    qs = list(range(11, 22))
    sizes = [2 ** q - 2 for q in qs]
    rounds = 3
    with _steady_heap():
        inputs = [generate(n).points for n in sizes]
        for n, pts in zip(sizes, inputs):
            assert decide(pts).accepted
            generate(n)
        # interleaved rounds, best per size over all of them
        gen_t = [float("inf")] * len(qs)
        dec_t = [float("inf")] * len(qs)
        for _ in range(rounds):
            for t, (n, pts) in enumerate(zip(sizes, inputs)):
                gen_t[t] = min(gen_t[t], _best_time(generate, n))
                dec_t[t] = min(dec_t[t], _best_time(decide, pts))
    gen_r = [b / a for a, b in zip(gen_t, gen_t[1:])]
    dec_r = [b / a for a, b in zip(dec_t, dec_t[1:])]
    ok = max(dec_r) <= 2.4 and max(gen_r) <= 2.2 and dec_t[-1] < 10
    report(7, ok, f"scaling q=11..21: max decide ratio={max(dec_r):.2f} (<=2.4), "
                  f"max generate ratio={max(gen_r):.2f} (<=2.2), "
                  f"decide n={sizes[-1]} in {dec_t[-1]:.2f}s (<10)")
    print("n", " ".join(map(str, sizes)))
    print("generate ms", " ".join(f"{t * 1e3:.2f}" for t in gen_t))
    print("decide ms", " ".join(f"{t * 1e3:.2f}" for t in dec_t))
    print("generate ratios", " ".join(f"{r:.2f}" for r in gen_r))
    print("decide ratios", " ".join(f"{r:.2f}" for r in dec_r))
    assert ok
