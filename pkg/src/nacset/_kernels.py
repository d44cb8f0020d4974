"""Compiled inner loops: exact orientation on int64 coordinates, onion
peeling, adoptable-pair scans, the well-laid sweep and the corner recursion.

Coordinates must satisfy |v| < 2**62 so that every coordinate difference
fits in an int64. Products of differences need up to 126 bits; they are
compared exactly with a two-limb unsigned multiply.
"""
import numpy as np
from numba import njit

_LO32 = np.uint64(0xFFFFFFFF)
_SH32 = np.uint64(32)
_SMALL = 1 << 31


@njit(cache=True, inline="always")
def _umul128(a, b):
    al = a & _LO32
    ah = a >> _SH32
    bl = b & _LO32
    bh = b >> _SH32
    ll = al * bl
    lh = al * bh
    hl = ah * bl
    hh = ah * bh
    mid = (ll >> _SH32) + (lh & _LO32) + (hl & _LO32)
    lo = (ll & _LO32) | (mid << _SH32)
    hi = hh + (lh >> _SH32) + (hl >> _SH32) + (mid >> _SH32)
    return hi, lo


@njit(cache=True, inline="always")
def _uabs(v):
    if v < 0:
        return np.uint64(-v)
    return np.uint64(v)


@njit(cache=True, inline="always")
def _sgn(v):
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


@njit(cache=True)
def det_sign(a, b, c, d):
    """Sign of a*b - c*d, exact for int64 operands with |x| < 2**63."""
    if (-_SMALL < a < _SMALL and -_SMALL < b < _SMALL
            and -_SMALL < c < _SMALL and -_SMALL < d < _SMALL):
        return _sgn(a * b - c * d)
    s1 = _sgn(a) * _sgn(b)
    s2 = _sgn(c) * _sgn(d)
    if s1 != s2:
        return 1 if s1 > s2 else -1
    if s1 == 0:
        return 0
    h1, l1 = _umul128(_uabs(a), _uabs(b))
    h2, l2 = _umul128(_uabs(c), _uabs(d))
    if h1 == h2 and l1 == l2:
        return 0
    r = 1 if (h1 > h2 or (h1 == h2 and l1 > l2)) else -1
    return r if s1 > 0 else -r


@njit(cache=True)
def orient(ax, ay, bx, by, cx, cy):
    return det_sign(bx - ax, cy - ay, by - ay, cx - ax)


@njit(cache=True)
def orient_idx(xs, ys, i, j, k):
    return det_sign(xs[j] - xs[i], ys[k] - ys[i], ys[j] - ys[i], xs[k] - xs[i])


@njit(cache=True)
def _chain(xs, ys, alive, m, buf):
    # Andrew's monotone chain over lexicographically sorted alive[:m],
    # keeping collinear boundary points. Returns the cycle length in buf.
    h = 0
    for t in range(m):
        i = alive[t]
        while h >= 2 and orient_idx(xs, ys, buf[h - 2], buf[h - 1], i) < 0:
            h -= 1
        buf[h] = i
        h += 1
    lower = h
    for t in range(m - 2, -1, -1):
        i = alive[t]
        while h > lower and orient_idx(xs, ys, buf[h - 2], buf[h - 1], i) < 0:
            h -= 1
        buf[h] = i
        h += 1
    return h - 1


@njit(cache=True)
def _first_flat_turn(xs, ys, buf, h):
    # Index t of the first zero turn at buf[t]; scans t = 1.. before the
    # wrap-around so an all-collinear cycle yields three distinct points.
    for t in range(1, h):
        nxt = buf[t + 1] if t + 1 < h else buf[0]
        if orient_idx(xs, ys, buf[t - 1], buf[t], nxt) == 0:
            return t
    if orient_idx(xs, ys, buf[h - 1], buf[0], buf[1]) == 0:
        return 0
    return -1


@njit(cache=True)
def hull(xs, ys):
    """Strict hull of sorted distinct points.

    Returns (vertex indices ccw from the first point, degenerate flag).
    """
    m = xs.size
    alive = np.arange(m)
    if m <= 2:
        return alive.copy(), False
    buf = np.empty(2 * m + 1, np.int64)
    h = _chain(xs, ys, alive, m, buf)
    keep = np.empty(h, np.int64)
    nk = 0
    flat = False
    for t in range(h):
        prv = buf[t - 1] if t > 0 else buf[h - 1]
        nxt = buf[t + 1] if t + 1 < h else buf[0]
        if orient_idx(xs, ys, prv, buf[t], nxt) != 0:
            keep[nk] = buf[t]
            nk += 1
        else:
            flat = True
    if nk == 0:
        out = np.empty(2, np.int64)
        out[0] = 0
        out[1] = m - 1
        return out, True
    return keep[:nk].copy(), flat


@njit(cache=True)
def peel(xs, ys, expected):
    """Onion peeling of sorted distinct points, outermost layer first.

    ``expected`` holds the required layer sizes outermost first; an empty
    array peels to exhaustion. Returns (status, order, starts, nlayers,
    info) where status 0 = ok, 1 = collinear hull points (info holds the
    triple), 2 = size mismatch (info = layer, observed, expected).
    """
    n = xs.size
    alive = np.arange(n)
    m = n
    order = np.empty(n, np.int64)
    starts = np.zeros(n + 1, np.int64)
    buf = np.empty(2 * n + 1, np.int64)
    removed = np.zeros(n, np.bool_)
    info = np.zeros(3, np.int64)
    limit = expected.size
    pos = 0
    layer = 0
    while m > 0:
        if m <= 2:
            for t in range(m):
                buf[t] = alive[t]
            h = m
        else:
            h = _chain(xs, ys, alive, m, buf)
            t = _first_flat_turn(xs, ys, buf, h)
            if t >= 0:
                info[0] = buf[t - 1] if t > 0 else buf[h - 1]
                info[1] = buf[t]
                info[2] = buf[t + 1] if t + 1 < h else buf[0]
                return 1, order, starts, layer, info
        if limit > 0:
            want = expected[layer] if layer < limit else 0
            if h != want:
                info[0] = layer
                info[1] = h
                info[2] = want
                return 2, order, starts, layer, info
        for t in range(h):
            order[pos + t] = buf[t]
            removed[buf[t]] = True
        pos += h
        layer += 1
        starts[layer] = pos
        w = 0
        for t in range(m):
            if not removed[alive[t]]:
                alive[w] = alive[t]
                w += 1
        m = w
    if limit > 0 and layer < limit:
        info[0] = layer
        info[1] = 0
        info[2] = expected[layer]
        return 2, order, starts, layer, info
    return 0, order, starts, layer, info


@njit(cache=True)
def adoptable(px, py, xs, ys, a, b, c, d):
    """Is the pair (b, c) adoptable from p, given the ccw run a, b, c, d?

    1 = yes, 0 = no, -1 = p is collinear with two of the four points.
    """
    s = orient(xs[b], ys[b], xs[c], ys[c], px, py)
    if s == 0:
        return -1
    ok = s > 0
    s = orient(xs[a], ys[a], xs[b], ys[b], px, py)
    if s == 0:
        return -1
    ok = ok and s > 0
    s = orient(xs[c], ys[c], xs[a], ys[a], px, py)
    if s == 0:
        return -1
    ok = ok and s > 0
    s = orient(xs[c], ys[c], xs[d], ys[d], px, py)
    if s == 0:
        return -1
    ok = ok and s > 0
    s = orient(xs[d], ys[d], xs[b], ys[b], px, py)
    if s == 0:
        return -1
    ok = ok and s > 0
    return 1 if ok else 0


@njit(cache=True)
def pair_scan(ix, iy, ox, oy):
    """Anchor the lexicographically least inner point and check the rest.

    Returns (status, r, i): status 0 = ok with anchor offset r, 1 = no
    anchor, 2 = misaligned at inner index i, 3 = degenerate at inner index
    i with candidate offset r.
    """
    w = ix.size
    big = ox.size
    anchor = -1
    for r in range(big):
        res = adoptable(ix[0], iy[0], ox, oy,
                        (r - 1) % big, r, (r + 1) % big, (r + 2) % big)
        if res < 0:
            return 3, r, 0
        if res == 1:
            anchor = r
            break
    if anchor < 0:
        return 1, -1, 0
    for i in range(1, w):
        r = (anchor + 2 * i) % big
        res = adoptable(ix[i], iy[i], ox, oy,
                        (r - 1) % big, r, (r + 1) % big, (r + 2) % big)
        if res < 0:
            return 3, r, i
        if res == 0:
            return 2, anchor, i
    return 0, anchor, 0


@njit(cache=True)
def _chord_ok(xs, ys, a, b, t):
    return orient(xs[a], ys[a], xs[b], ys[b], xs[t], ys[t])


@njit(cache=True)
def region_scan(xs, ys, type2, widths, starts, offsets):
    """Check every label against every layer below it.

    xs, ys hold all layers concatenated innermost first (``starts``); node
    (j, i) of 0-based level j is labeled by the point at ccw index
    (i + offsets[j]) % widths[j] of layer j. A binary node whose left and
    right descendant arcs on layer m are [fl..ll] and [fr..lr], with
    neighbours pv and nx, must see its label strictly left of the chords
    fl->lr, fr->pv and nx->ll. The three-way type-2 root must be left of
    first(A_t) -> last(A_t+1) for its three child arcs A_t.

    Returns (status, j, i, m, a, b): status 0 ok, 1 label not left of the
    chord a->b (flat indices), 2 collinear.
    """
    nlev = widths.size
    for j in range(nlev):
        wj = widths[j]
        lab0 = starts[j]
        for m in range(j + 1, nlev):
            wm = widths[m]
            base = starts[m]
            om = offsets[m]
            for i in range(wj):
                t = lab0 + (i + offsets[j]) % wj
                if type2 and j == 0:
                    s = wm // 3
                    for c in range(3):
                        a = base + (c * s + om) % wm
                        b = base + ((c + 2) * s - 1 + om) % wm
                        r = _chord_ok(xs, ys, a, b, t)
                        if r <= 0:
                            return (2 if r == 0 else 1), j, i, m, a, b
                    continue
                span = wm // wj
                fl = i * span
                ll = fl + span // 2 - 1
                lr = fl + span - 1
                for c in range(3):
                    if c == 0:
                        pa, pb = fl, lr
                    elif c == 1:
                        pa, pb = ll + 1, fl - 1
                    else:
                        pa, pb = lr + 1, ll
                    a = base + (pa + om + wm) % wm
                    b = base + (pb + om + wm) % wm
                    r = _chord_ok(xs, ys, a, b, t)
                    if r <= 0:
                        return (2 if r == 0 else 1), j, i, m, a, b
    return 0, 0, 0, 0, 0, 0


@njit(cache=True)
def split_corners(c, step):
    """Child corners of every corner in ``c`` (shape (m, 3, 2)), cut at 1/5
    and 2/5 of both legs. Returns (children, ok) where ``ok`` is false if
    some coordinate of ``c`` is not a multiple of ``step``."""
    m = c.shape[0]
    child = np.empty((2 * m, 3, 2), dtype=np.int64)
    ok = True
    for i in range(m):
        for t in range(2):
            q = c[i, 0, t]
            o = c[i, 1, t]
            p = c[i, 2, t]
            if q % step != 0 or o % step != 0 or p % step != 0:
                ok = False
            lq = (q - o) // 5
            lp = (p - o) // 5
            child[2 * i, 0, t] = o + 2 * lq
            child[2 * i, 1, t] = o + lq
            child[2 * i, 2, t] = o + lp
            child[2 * i + 1, 0, t] = o + lq
            child[2 * i + 1, 1, t] = o + lp
            child[2 * i + 1, 2, t] = o + 2 * lp
    return child, ok


@njit(cache=True)
def leaf_support(leaf):
    """Two support points per leaf corner at 1/5 of each leg; ``ok`` as in
    ``split_corners`` with step 10."""
    m = leaf.shape[0]
    out = np.empty((2 * m, 2), dtype=np.int64)
    ok = True
    for i in range(m):
        for t in range(2):
            q = leaf[i, 0, t]
            o = leaf[i, 1, t]
            p = leaf[i, 2, t]
            if q % 10 != 0 or o % 10 != 0 or p % 10 != 0:
                ok = False
            out[2 * i, t] = o + (q - o) // 5
            out[2 * i + 1, t] = o + (p - o) // 5
    return out, ok


@njit(cache=True, inline="always")
def _reverse(out, lo, hi):
    hi -= 1
    while lo < hi:
        for t in range(2):
            v = out[lo, t]
            out[lo, t] = out[hi, t]
            out[hi, t] = v
        lo += 1
        hi -= 1


@njit(cache=True, inline="always")
def _split(path, j, right, t):
    q = path[j - 1, 0, t]
    o = path[j - 1, 1, t]
    p = path[j - 1, 2, t]
    lq = (q - o) // 5
    lp = (p - o) // 5
    if right:
        path[j, 0, t] = o + lq
        path[j, 1, t] = o + lp
        path[j, 2, t] = o + 2 * lp
    else:
        path[j, 0, t] = o + 2 * lq
        path[j, 1, t] = o + lq
        path[j, 2, t] = o + lp
    return (q - o) % 5 == 0 and (p - o) % 5 == 0


@njit(cache=True)
def drawing_points(k, size, counts):
    """Labels of the leading ``counts[j - 1]`` nodes of every level ``j`` of
    the depth-``k`` recursion, level after level, each level rotated to
    start at its lexicographically least label.

    The leaves are walked left to right keeping only the corner path from
    the root, and only the levels whose node changed are recomputed, so the
    work is linear and the output is the only large array. A node's label
    is written when its last leaf is reached. Returns ``(points, rot, ok)``
    where ``rot[j - 1]`` is the node index that ends up first and ``ok`` is
    false on an inexact division or odd support coordinate.
    """
    base = np.zeros(k + 1, dtype=np.int64)
    leaves = 0
    for j in range(1, k + 1):
        if j < k:
            base[j] = base[j - 1] + counts[j - 1]
        leaves = max(leaves, counts[j - 1] << (k - j))
    n = base[k - 1] + counts[k - 1]
    out = np.empty((n, 2), dtype=np.int64)
    best = np.zeros(k, dtype=np.int64)
    path = np.zeros((k + 1, 3, 2), dtype=np.int64)
    path[0, 0, 1] = size
    path[0, 2, 0] = size
    first = np.zeros((k + 1, 2), dtype=np.int64)
    sup = np.zeros((2, 2), dtype=np.int64)
    ok = True
    for i in range(leaves):
        lo = 1
        if i > 0:
            tz = 0
            while (i >> tz) & 1 == 0:
                tz += 1
            lo = k - tz
        for j in range(lo, k + 1):
            right = (i >> (k - j)) & 1
            for t in range(2):
                if not _split(path, j, right, t):
                    ok = False
        for t in range(2):
            q = path[k, 0, t]
            o = path[k, 1, t]
            p = path[k, 2, t]
            if (q - o) % 5 != 0 or (p - o) % 5 != 0:
                ok = False
            sup[0, t] = o + (q - o) // 5
            sup[1, t] = o + (p - o) // 5
            if sup[0, t] % 2 != 0 or sup[1, t] % 2 != 0:
                ok = False
        for j in range(lo, k + 1):
            first[j, 0] = sup[0, 0]
            first[j, 1] = sup[0, 1]
        tz = 0
        while ((i + 1) >> tz) & 1 == 0:
            tz += 1
        for j in range(max(k - tz, 1), k + 1):
            pos = i >> (k - j)
            if pos >= counts[j - 1]:
                continue
            r = base[j - 1] + pos
            out[r, 0] = (first[j, 0] + sup[1, 0]) // 2
            out[r, 1] = (first[j, 1] + sup[1, 1]) // 2
            b = base[j - 1] + best[j - 1]
            if out[r, 0] < out[b, 0] or (out[r, 0] == out[b, 0] and out[r, 1] < out[b, 1]):
                best[j - 1] = pos
    for j in range(1, k + 1):
        s = best[j - 1]
        if s > 0:
            a = base[j - 1]
            w = counts[j - 1]
            _reverse(out, a, a + s)
            _reverse(out, a + s, a + w)
            _reverse(out, a, a + w)
    return out, best, ok
