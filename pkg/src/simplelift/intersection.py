"""Self-intersection numbers of closed curves carried by ribbon graphs.

A closed curve is a cyclic sequence of departure ends (``darts``).  Passage
``i`` is the visit to the vertex between dart ``i - 1`` and dart ``i``.  Two
strands of the curve that run side by side along a stretch of edges form a
common segment; the pair crosses once if the way they enter the segment and
the way they leave it are linked in the cyclic orders at the two ends of the
segment, and not at all otherwise.  Counting linked segments gives the
number of double points of a representative without bigons, which is the
geometric self-intersection number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ribbon import RibbonGraph, opposite
from .words import CyclicWord, power_root


class NonPrimitive(ValueError):
    pass


class NonDivergent(RuntimeError):
    """Two distinct strands never separated; impossible for primitive curves."""


@dataclass(frozen=True)
class VertexPassage:
    index: int
    vertex: int
    in_end: int
    out_end: int


@dataclass(frozen=True)
class CurvePath:
    graph: RibbonGraph
    darts: tuple

    def __post_init__(self):
        darts = tuple(self.darts)
        object.__setattr__(self, "darts", darts)
        g = self.graph
        n = len(darts)
        if n == 0:
            raise ValueError("empty path")
        for k in range(n):
            h, nxt = darts[k], darts[(k + 1) % n]
            if g.vertex_of[opposite(h)] != g.vertex_of[nxt]:
                raise ValueError(f"path is not closed at step {k}")
            if nxt == opposite(h):
                raise ValueError(f"path backtracks at step {k}")
        for p in range(1, n):
            if n % p == 0 and all(darts[k] == darts[k % p] for k in range(p, n)):
                raise NonPrimitive("path is a proper power")

    def __len__(self):
        return len(self.darts)

    def passage(self, i: int) -> VertexPassage:
        n = len(self.darts)
        i %= n
        out = self.darts[i]
        return VertexPassage(i, self.graph.vertex_of[out], opposite(self.darts[i - 1]), out)

    def passages(self) -> list:
        return [self.passage(i) for i in range(len(self.darts))]

    def reversed(self) -> CurvePath:
        return CurvePath(self.graph, tuple(opposite(h) for h in reversed(self.darts)))


def as_path(w: CyclicWord, g: RibbonGraph) -> CurvePath:
    """Read ``w`` as an edge path around the single vertex of ``g``."""
    if g.n_vertices != 1:
        raise ValueError("as_path needs a one-vertex ribbon graph")
    if w.rank != g.n_edges:
        raise ValueError(f"rank mismatch: word rank {w.rank}, graph has {g.n_edges} edges")
    if power_root(w)[1] != 1:
        raise NonPrimitive(f"{w} is a proper power")
    edge_of = {lab: e for e, (_, _, lab) in enumerate(g.edges)}
    darts = tuple(2 * edge_of[x.generator] + (0 if x.sign > 0 else 1) for x in w)
    return CurvePath(g, darts)


class _Strands:
    """Oriented strands of one path; ``s = -1`` walks the path backwards."""

    __slots__ = ("darts", "n")

    def __init__(self, path: CurvePath):
        self.darts = path.darts
        self.n = len(path.darts)

    def ends(self, i, s):
        d = self.darts
        if s > 0:
            return d[i - 1] ^ 1, d[i]
        return d[i], d[i - 1] ^ 1


def _chords_cross(g: RibbonGraph, x1, y1, x2, y2) -> bool:
    # four distinct ends at one vertex
    span = g.ccw_offset(x1, y1)
    return (g.ccw_offset(x1, x2) < span) != (g.ccw_offset(x1, y2) < span)


def _segment(g: RibbonGraph, st: _Strands, i: int, j: int):
    """Linked-segment test for the ordered passage pair ``(i, j)``.

    Returns ``None`` unless passage ``i`` (read forwards) and passage ``j``
    (read in the direction that aligns it with ``i``) enter the vertex along
    different ends, i.e. unless this is where their common segment begins.
    Otherwise returns ``(linked, end_pair)`` where ``end_pair`` is the
    unordered pair of passages where the segment ends.
    """
    pi, po = st.ends(i, 1)
    if g.vertex_of[po] != g.vertex_of[st.darts[j]]:
        return None
    qi, qo = st.ends(j, 1)
    if pi == qi or po == qo:
        s = 1
    elif pi == qo or po == qi:
        s = -1
    else:
        s = 1
    qi, qo = st.ends(j, s)
    if pi == qi:
        return None
    if po != qo:
        return _chords_cross(g, pi, po, qi, qo), frozenset((i, j))
    # order of the two strands along the shared outgoing end
    start = g.ccw_offset(po, pi) < g.ccw_offset(po, qi)
    n = st.n
    a, b = i, j
    for _ in range(2 * n):
        a = (a + 1) % n
        b = (b + s) % n
        ai, ao = st.ends(a, 1)
        bi, bo = st.ends(b, s)
        if ao != bo:
            finish = g.ccw_offset(ai, ao) < g.ccw_offset(ai, bo)
            return start == finish, frozenset((a, b))
    raise NonDivergent(f"passages {i} and {j} never diverge")


def crossing(path: CurvePath, i: int, j: int) -> bool:
    """Whether the crossing of a linked segment is charged to passages ``i`` and ``j``.

    Each linked segment is charged to exactly one unordered passage pair, so
    summing over all pairs gives :func:`self_intersection`.
    """
    n = len(path)
    i %= n
    j %= n
    if i == j:
        raise ValueError("passages must be distinct")
    g = path.graph
    st = _Strands(path)
    here = frozenset((i, j))
    for first, second in ((i, j), (j, i)):
        seg = _segment(g, st, first, second)
        if seg is None:
            continue
        linked, other = seg
        if not linked:
            return False
        # a segment traversed in opposite directions begins at both of its
        # ends; charge it to the smaller passage pair
        back = _segment(g, st, second, first)
        if back is not None or other == here:
            return True
        return sorted(here) < sorted(other)
    return False


def _as_path(curve, graph) -> CurvePath:
    if isinstance(curve, CurvePath):
        return curve
    if graph is None:
        raise ValueError("a ribbon graph is needed to place a word")
    return as_path(curve, graph)


def self_intersection(curve, graph: RibbonGraph | None = None) -> int:
    """Geometric self-intersection number of a primitive closed curve.

    ``curve`` is a :class:`CurvePath` or a :class:`CyclicWord` on the
    one-vertex ``graph``.
    """
    path = _as_path(curve, graph)
    return _count(path, stop_at_first=False)


def is_simple(curve, graph: RibbonGraph | None = None) -> bool:
    path = _as_path(curve, graph)
    return _count(path, stop_at_first=True) == 0


def _count(path: CurvePath, stop_at_first: bool) -> int:
    g = path.graph
    st = _Strands(path)
    n = len(path)
    by_vertex = {}
    for i, h in enumerate(path.darts):
        by_vertex.setdefault(g.vertex_of[h], []).append(i)
    total = 0
    for idx in by_vertex.values():
        for i in idx:
            for j in idx:
                if i == j:
                    continue
                seg = _segment(g, st, i, j)
                if seg is not None and seg[0]:
                    if stop_at_first:
                        return 1
                    total += 1
    # every linked segment is met from both of its strands
    if total % 2:
        raise AssertionError("odd linked-pair count")
    return total // 2
