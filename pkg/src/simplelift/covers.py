"""Finite covers of a rose, elevations of curves, and the simple-lift degree.

A connected degree-``d`` cover of a one-vertex ribbon graph is a tuple of
permutations of the sheets ``0..d-1``, one per generator, generating a
transitive group.  Covers are enumerated as standard coset tables: the
table is filled row by row in the column order ``a, A, b, B, ...`` and a
new sheet always receives the next unused number.  Every index-``d``
subgroup of the free group then appears exactly once.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from string import ascii_lowercase

from .intersection import CurvePath, NonPrimitive, is_simple
from .ribbon import RibbonGraph, cover_ribbon, invert_perm, pants_base
from .words import CyclicWord, power_root

log = logging.getLogger(__name__)


class NotFoundUpTo(LookupError):
    """No cover of degree at most ``cap`` carries a simple closed lift."""

    def __init__(self, word, cap):
        super().__init__(f"no simple lift of {word} in covers of degree <= {cap}")
        self.word = word
        self.cap = cap


@dataclass(frozen=True)
class PermCover:
    degree: int
    perms: tuple  # perms[x][i] = sheet reached from sheet i along generator x

    def __post_init__(self):
        perms = tuple(tuple(p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        for p in perms:
            if sorted(p) != list(range(self.degree)):
                raise ValueError(f"not a permutation of {self.degree} sheets: {p}")
        if not _transitive(self.degree, perms):
            raise ValueError("cover is not connected")

    @property
    def rank(self) -> int:
        return len(self.perms)

    def to_record(self) -> dict:
        rec = {"d": self.degree}
        for x, p in enumerate(self.perms):
            rec[f"sigma_{ascii_lowercase[x]}"] = [i + 1 for i in p]
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> PermCover:
        perms = []
        x = 0
        while f"sigma_{ascii_lowercase[x]}" in rec:
            perms.append([i - 1 for i in rec[f"sigma_{ascii_lowercase[x]}"]])
            x += 1
        return cls(rec["d"], perms)


def _transitive(d, perms) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for p in perms:
            for j in (p[i], p.index(i)):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == d


def canonicalize(cover: PermCover) -> PermCover:
    """Renumber sheets in first-visit order of a breadth-first scan from sheet 0."""
    d = cover.degree
    perms = cover.perms
    inv = [invert_perm(p) for p in perms]
    label = {0: 0}
    queue = [0]
    for i in queue:
        for x in range(len(perms)):
            for j in (perms[x][i], inv[x][i]):
                if j not in label:
                    label[j] = len(label)
                    queue.append(j)
    new = []
    for p in perms:
        q = [0] * d
        for i in range(d):
            q[label[i]] = label[p[i]]
        new.append(q)
    return PermCover(d, new)


def hall_count(d: int, rank: int = 2) -> int:
    """Number of index-``d`` subgroups of the free group, by M. Hall's recursion."""
    if d < 1:
        raise ValueError("d must be positive")
    a = [0]
    for m in range(1, d + 1):
        total = m * factorial(m) ** (rank - 1)
        for k in range(1, m):
            total -= factorial(m - k) ** (rank - 1) * a[k]
        a.append(total)
    return a[d]


# ---------------------------------------------------------------------------
# enumeration


def _empty_table(d, rank):
    return [[-1] * d for _ in range(2 * rank)]


def _first_undefined(table, d):
    for i in range(d):
        for col in range(len(table)):
            if table[col][i] == -1:
                return i, col
    return None


def _children(table, used, d):
    """Partial tables extending ``table`` at its first undefined entry, in order."""
    spot = _first_undefined(table, d)
    if spot is None:
        return None
    i, col = spot
    if i >= used:
        return []
    out = []
    for j in range(min(used + 1, d)):
        if table[col ^ 1][j] != -1:
            continue
        t = [row[:] for row in table]
        t[col][i] = j
        t[col ^ 1][j] = i
        out.append((t, max(used, j + 1)))
    return out


def _walk(table, used, d):
    """Yield complete standard tables below a partial one, depth first."""
    spot = _first_undefined(table, d)
    if spot is None:
        if used == d:
            yield [tuple(table[2 * x]) for x in range(len(table) // 2)]
        return
    i, col = spot
    if i >= used:
        return
    inv = table[col ^ 1]
    row = table[col]
    for j in range(min(used + 1, d)):
        if inv[j] != -1:
            continue
        row[i] = j
        inv[j] = i
        yield from _walk(table, max(used, j + 1), d)
        row[i] = -1
        inv[j] = -1


def _shards(d, rank, target):
    """Split the search tree into at least ``target`` ordered subtrees when possible."""
    frontier = [(_empty_table(d, rank), 1)]
    while len(frontier) < target:
        grown = []
        changed = False
        for t, used in frontier:
            kids = _children(t, used, d)
            if kids is None:
                grown.append((t, used))
            else:
                grown.extend(kids)
                changed = True
        frontier = grown
        if not changed:
            break
    return frontier


def iter_covers(d: int, rank: int = 2):
    """All connected degree-``d`` covers of the rank-``rank`` rose, in canonical form."""
    if d < 1:
        raise ValueError("d must be positive")
    for perms in _walk(_empty_table(d, rank), 1, d):
        yield PermCover(d, perms)


def _count_shard(args):
    table, used, d, visitor = args
    n = 0
    for perms in _walk(table, used, d):
        if visitor is not None:
            visitor(PermCover(d, perms))
        n += 1
    return n


def enumerate_covers(d: int, visitor=None, rank: int = 2, jobs: int = 1) -> int:
    """Visit every connected degree-``d`` cover once; return how many were visited.

    With ``jobs > 1`` the visitor runs in worker processes and must be
    picklable.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if jobs <= 1:
        return _count_shard((_empty_table(d, rank), 1, d, visitor))
    shards = [(t, used, d, visitor) for t, used in _shards(d, rank, 4 * jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_shard, shards))


# ---------------------------------------------------------------------------
# catalog


def catalog_path(directory, d: int, rank: int = 2) -> str:
    return os.path.join(directory, f"covers-rank{rank}-d{d}.jsonl")


def write_catalog(directory, d: int, rank: int = 2) -> str:
    os.makedirs(directory, exist_ok=True)
    path = catalog_path(directory, d, rank)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        for c in iter_covers(d, rank):
            fh.write(json.dumps(c.to_record()) + "\n")
    os.replace(tmp, path)
    return path


def load_catalog(directory, d: int, rank: int = 2) -> list:
    """Covers of degree ``d`` from the catalog, (re)generating the file if needed."""
    path = catalog_path(directory, d, rank)
    expected = hall_count(d, rank)
    if os.path.exists(path):
        with open(path) as fh:
            covers = [PermCover.from_record(json.loads(line)) for line in fh if line.strip()]
        if len(covers) == expected:
            return covers
        log.warning("catalog %s has %d covers, expected %d; regenerating", path, len(covers), expected)
    write_catalog(directory, d, rank)
    with open(path) as fh:
        return [PermCover.from_record(json.loads(line)) for line in fh if line.strip()]


# ---------------------------------------------------------------------------
# lifting curves


def sigma_of_word(cover: PermCover, w: CyclicWord) -> tuple:
    """Sheet permutation of reading ``w`` (its stored rotation) from each sheet.

    Other rotations of ``w`` give conjugate permutations.
    """
    if w.rank != cover.rank:
        raise ValueError(f"rank mismatch: word rank {w.rank}, cover rank {cover.rank}")
    return sigma_of_letters(cover, w.letters)


def sigma_of_letters(cover: PermCover, letters) -> tuple:
    steps = _letter_maps(cover)
    out = []
    for i in range(cover.degree):
        for x in letters:
            i = steps[x.generator][x.sign > 0][i]
        out.append(i)
    return tuple(out)


def _letter_maps(cover):
    return [(invert_perm(p), p) for p in cover.perms]


@dataclass(frozen=True)
class Elevation:
    start_sheet: int
    degree: int
    path: CurvePath


def _lift_darts(cover, w, start, times):
    d = cover.degree
    perms = cover.perms
    inv = [invert_perm(p) for p in perms]
    darts = []
    i = start
    for _ in range(times):
        for x in w:
            g = x.generator
            if x.sign > 0:
                darts.append(2 * (g * d + i))
                i = perms[g][i]
            else:
                j = inv[g][i]
                darts.append(2 * (g * d + j) + 1)
                i = j
    return tuple(darts)


def _require_primitive(w):
    if power_root(w)[1] != 1:
        raise NonPrimitive(f"{w} is a proper power")


def elevations(cover: PermCover, w: CyclicWord, base: RibbonGraph | None = None) -> list:
    """One elevation per cycle of the sheet permutation of ``w``."""
    _require_primitive(w)
    base = base or pants_base()
    sigma = sigma_of_word(cover, w)
    graph = cover_ribbon(base, cover)
    seen = set()
    out = []
    for start in range(cover.degree):
        if start in seen:
            continue
        m = 0
        i = start
        while True:
            seen.add(i)
            i = sigma[i]
            m += 1
            if i == start:
                break
        out.append(Elevation(start, m, CurvePath(graph, _lift_darts(cover, w, start, m))))
    return out


@dataclass(frozen=True)
class SimpleLift:
    word: CyclicWord
    degree: int
    cover: PermCover
    elevation: Elevation

    def witness_record(self) -> dict:
        rec = self.cover.to_record()
        rec["word"] = str(self.word)
        rec["start_sheet"] = self.elevation.start_sheet + 1
        return rec


def _first_simple_lift(cover, w, base):
    sigma = sigma_of_word(cover, w)
    fixed = [i for i in range(cover.degree) if sigma[i] == i]
    if not fixed:
        return None
    graph = cover_ribbon(base, cover)
    for start in fixed:
        path = CurvePath(graph, _lift_darts(cover, w, start, 1))
        if is_simple(path):
            return Elevation(start, 1, path)
    return None


def _search_shard(args):
    w, base, covers = args
    for k, c in enumerate(covers):
        if _first_simple_lift(c, w, base) is not None:
            return k
    return None


def _search_tree_shard(args):
    w, base, table, used, d = args
    for perms in _walk(table, used, d):
        c = PermCover(d, perms)
        if _first_simple_lift(c, w, base) is not None:
            return c.perms
    return None


def find_simple_lift(w: CyclicWord, d: int, base: RibbonGraph | None = None,
                     catalog=None, jobs: int = 1):
    """First degree-``d`` cover (in canonical order) with a simple closed lift of ``w``."""
    _require_primitive(w)
    base = base or pants_base()
    rank = base.n_edges
    if catalog is not None:
        covers = load_catalog(catalog, d, rank)
        if jobs <= 1:
            hit = _search_shard((w, base, covers))
            found = None if hit is None else covers[hit]
        else:
            size = max(1, -(-len(covers) // (4 * jobs)))
            chunks = [covers[k:k + size] for k in range(0, len(covers), size)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                hits = list(pool.map(_search_shard, [(w, base, ch) for ch in chunks]))
            found = next((ch[h] for ch, h in zip(chunks, hits) if h is not None), None)
    elif jobs <= 1:
        found = next((c for c in iter_covers(d, rank) if _first_simple_lift(c, w, base)), None)
    else:
        shards = [(w, base, t, used, d) for t, used in _shards(d, rank, 4 * jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = list(pool.map(_search_tree_shard, shards))
        perms = next((h for h in hits if h is not None), None)
        found = None if perms is None else PermCover(d, perms)
    if found is None:
        return None
    return SimpleLift(w, d, found, _first_simple_lift(found, w, base))


def min_simple_lift_degree(w: CyclicWord, cap: int, base: RibbonGraph | None = None,
                           catalog=None, jobs: int = 1) -> SimpleLift:
    """Least degree of a connected cover in which ``w`` has a simple closed lift.

    Raises :class:`NotFoundUpTo` when no cover of degree ``<= cap`` works.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    _require_primitive(w)
    for d in range(1, cap + 1):
        hit = find_simple_lift(w, d, base, catalog=catalog, jobs=jobs)
        if hit is not None:
            return hit
    raise NotFoundUpTo(w, cap)
