"""Independent oracles used by the test-suite."""

from fractions import Fraction
from math import factorial

from simplelift.intersection import as_path


def tree_intersection(curve, graph=None):
    """Self-intersection via lifts to the universal cover of a ribbon graph.

    Every lift of the curve through a vertex ``v`` is the axis of a rotation
    of the path starting at a passage through ``v``.  Two lifts cross iff
    their endpoints at infinity interleave in the circular order of ends of
    the planar tree.  A crossing orbit whose lifts share ``k`` edges is seen
    ``k + 1`` times, spread over the vertices of the shared segment.
    """
    path = curve if graph is None else as_path(curve, graph)
    graph = path.graph
    d = path.darts
    n = len(d)
    horizon = 4 * n + 4

    def forward(i):
        return [d[(i + k) % n] for k in range(horizon)]

    def backward(i):
        return [d[(i - 1 - k) % n] ^ 1 for k in range(horizon)]

    def key(ray):
        ref = graph.end_at(graph.vertex_of[ray[0]], 0)
        out = [graph.ccw_offset(ref, ray[0])]
        for prev, nxt in zip(ray, ray[1:]):
            out.append(graph.ccw_offset(prev ^ 1, nxt))
        return out

    def common(r, s):
        k = 0
        while k < horizon and r[k] == s[k]:
            k += 1
        return k

    rays = [(forward(i), backward(i)) for i in range(n)]
    keys = [(key(f), key(b)) for f, b in rays]
    total = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            if graph.vertex_of[d[i]] != graph.vertex_of[d[j]]:
                continue
            (fi, bi), (fj, bj) = rays[i], rays[j]
            lo, hi = sorted(keys[i])
            inside = [lo < x < hi for x in keys[j]]
            if inside[0] == inside[1]:
                continue
            aligned = common(fi, fj) + common(bi, bj)
            anti = common(fi, bj) + common(bi, fj)
            assert aligned == 0 or anti == 0
            total += Fraction(1, 1 + aligned + anti)
    assert total.denominator == 1, total
    return int(total)


def hall_recursion(d, rank=2):
    """Number of index-``d`` subgroups of the free group of the given rank."""
    a = [0, 1]
    for m in range(2, d + 1):
        s = m * factorial(m) ** (rank - 1)
        s -= sum(factorial(m - k) ** (rank - 1) * a[k] for k in range(1, m))
        a.append(s)
    return a[d]


def least_rotation_brute(seq):
    seq = list(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def axis_distance(A, B):
    """Hyperbolic distance between the axes of two hyperbolic isometries.

    Computed from fixed points on the real line: after translating so that
    one axis is a vertical line through 0, the other is a half circle with
    feet ``r1 < r2`` of one sign and ``cosh d = |r1 + r2| / (r2 - r1)``.
    """
    import math

    def fixed_points(M):
        if abs(M.c) < 1e-300:
            return [M.b / (M.d - M.a), math.inf]
        disc = math.sqrt((M.a + M.d) ** 2 - 4)
        return [((M.a - M.d) + disc) / (2 * M.c), ((M.a - M.d) - disc) / (2 * M.c)]

    fa, fb = fixed_points(A), fixed_points(B)
    assert math.inf in fa, "first isometry must fix infinity"
    x0 = next(p for p in fa if p != math.inf)
    r1, r2 = sorted(p - x0 for p in fb)
    return math.acosh(abs(r1 + r2) / (r2 - r1))
