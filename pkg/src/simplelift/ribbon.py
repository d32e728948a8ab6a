"""Ribbon graphs as combinatorial surfaces with boundary.

An edge ``e`` runs from ``origin`` to ``terminus`` and has two ends, encoded
as integers: ``2*e`` is the end at the origin and ``2*e + 1`` the end at the
terminus.  Each vertex carries the counterclockwise cyclic sequence of the
ends attached to it.

A boundary walk departs along an end ``h``, arrives at the opposite end
``h ^ 1`` and leaves along the next end after ``h ^ 1`` in that vertex's
cyclic order.  So the walks are the cycles of ``next_end(h ^ 1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .words import CyclicWord, Letter


class RibbonGraphError(ValueError):
    pass


def end_id(edge: int, flag: int) -> int:
    return 2 * edge + flag


def opposite(end: int) -> int:
    return end ^ 1


@dataclass(frozen=True)
class RibbonGraph:
    n_vertices: int
    edges: tuple  # (origin, terminus, label) per edge
    orders: tuple  # per vertex, cyclic tuple of (edge, flag)
    vertex_of: tuple = field(init=False, repr=False, compare=False)
    position: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple(tuple(e) for e in self.edges)
        orders = tuple(tuple(tuple(x) for x in v) for v in self.orders)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "orders", orders)
        if len(orders) != self.n_vertices:
            raise RibbonGraphError("one cyclic order per vertex required")
        n_ends = 2 * len(edges)
        vertex_of = [-1] * n_ends
        position = [-1] * n_ends
        for v, order in enumerate(orders):
            for i, (e, flag) in enumerate(order):
                if not (0 <= e < len(edges)) or flag not in (0, 1):
                    raise RibbonGraphError(f"bad end {(e, flag)}")
                h = end_id(e, flag)
                if vertex_of[h] != -1:
                    raise RibbonGraphError(f"end {(e, flag)} listed twice")
                vertex_of[h] = v
                position[h] = i
        if -1 in vertex_of:
            raise RibbonGraphError("every end must appear in a cyclic order")
        for e, (o, t, _) in enumerate(edges):
            if vertex_of[end_id(e, 0)] != o or vertex_of[end_id(e, 1)] != t:
                raise RibbonGraphError(f"edge {e} ends disagree with its endpoints")
        object.__setattr__(self, "vertex_of", tuple(vertex_of))
        object.__setattr__(self, "position", tuple(position))
        if not self._connected():
            raise RibbonGraphError("ribbon graph must be connected")

    def _connected(self) -> bool:
        if self.n_vertices == 0:
            return False
        adj = [[] for _ in range(self.n_vertices)]
        for o, t, _ in self.edges:
            adj[o].append(t)
            adj[t].append(o)
        seen = {0}
        stack = [0]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n_vertices

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def valence(self, v: int) -> int:
        return len(self.orders[v])

    def end_at(self, v: int, i: int) -> int:
        order = self.orders[v]
        e, flag = order[i % len(order)]
        return end_id(e, flag)

    def next_end(self, h: int) -> int:
        """The end following ``h`` counterclockwise at its vertex."""
        v = self.vertex_of[h]
        return self.end_at(v, self.position[h] + 1)

    def ccw_offset(self, base: int, h: int) -> int:
        """Steps counterclockwise from end ``base`` to end ``h`` at their common vertex."""
        v = self.vertex_of[base]
        return (self.position[h] - self.position[base]) % self.valence(v)

    def letter_of_end(self, h: int) -> Letter:
        """Letter read when departing along end ``h``."""
        e, flag = divmod(h, 2)
        return Letter(self.edges[e][2], 1 if flag == 0 else -1)

    def to_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "edges": [list(e) for e in self.edges],
            "orders": [[list(x) for x in v] for v in self.orders],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> RibbonGraph:
        return cls(data["n_vertices"], data["edges"], data["orders"])

    @classmethod
    def from_json(cls, text: str) -> RibbonGraph:
        return cls.from_dict(json.loads(text))


def rose(order, rank=None) -> RibbonGraph:
    """One-vertex ribbon graph; ``order`` lists ``(label, flag)`` ends counterclockwise."""
    labels = sorted({lab for lab, _ in order})
    if rank is None:
        rank = len(labels)
    if labels != list(range(rank)):
        raise RibbonGraphError("rose needs every label 0..rank-1")
    edges = [(0, 0, lab) for lab in range(rank)]
    return RibbonGraph(1, edges, [list(order)])


# Counterclockwise ends at the vertex of the pants: tail of a, head of a,
# head of b, tail of b.  Chosen so that ``aB`` runs once around the third
# cuff and ``ab`` has exactly one self-crossing.
PANTS_ORDER = ((0, 0), (0, 1), (1, 1), (1, 0))


def pants_base() -> RibbonGraph:
    return rose(PANTS_ORDER)


def boundary_walks(g: RibbonGraph) -> list:
    """Boundary components as cyclic tuples of departure ends.

    Each walk starts at its least end id; walks are sorted by that end.
    """
    seen = [False] * (2 * g.n_edges)
    walks = []
    for start in range(2 * g.n_edges):
        if seen[start]:
            continue
        walk = []
        h = start
        while not seen[h]:
            seen[h] = True
            walk.append(h)
            h = g.next_end(opposite(h))
        walks.append(tuple(walk))
    return walks


def walk_labels(g: RibbonGraph, walk) -> CyclicWord:
    """The cyclic word spelled by a closed sequence of departure ends."""
    rank = 1 + max(lab for _, _, lab in g.edges)
    return CyclicWord(tuple(g.letter_of_end(h) for h in walk), rank)


def euler_and_genus(g: RibbonGraph) -> tuple[int, int, int]:
    chi = g.n_vertices - g.n_edges
    b = len(boundary_walks(g))
    twice_g = 2 - b - chi
    if twice_g < 0 or twice_g % 2:
        raise AssertionError(f"inconsistent ribbon graph: chi={chi}, b={b}")
    return chi, b, twice_g // 2


def cover_ribbon(base: RibbonGraph, cover) -> RibbonGraph:
    """Ribbon graph of a finite cover of a one-vertex ribbon graph.

    ``cover`` supplies ``degree`` and ``perms`` (0-indexed images, one
    permutation per generator).  The edge labelled ``x`` from sheet ``i`` has
    id ``x * degree + i``.
    """
    if base.n_vertices != 1:
        raise RibbonGraphError("base must have one vertex")
    rank = base.n_edges
    if len(cover.perms) != rank:
        raise RibbonGraphError(f"rank mismatch: base has {rank}, cover has {len(cover.perms)}")
    d = cover.degree
    perms = cover.perms
    inv = [invert_perm(p) for p in perms]
    edges = []
    for x in range(rank):
        lab = base.edges[x][2]
        for i in range(d):
            edges.append((i, perms[x][i], lab))
    orders = []
    for i in range(d):
        order = []
        for e, flag in base.orders[0]:
            # tail ends of sheet i leave along edge (x, i); head ends arrive
            # along the edge from the preimage sheet
            sheet = i if flag == 0 else inv[e][i]
            order.append((e * d + sheet, flag))
        orders.append(order)
    return RibbonGraph(d, edges, orders)


def invert_perm(p) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)
