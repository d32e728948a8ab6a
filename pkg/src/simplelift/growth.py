"""Lower bounds for the simple-lift degree as a function of intersection or length.

Every bound here is witnessed by the curve ``a b^n``: it has ``n``
self-crossings and no simple closed lift in a cover of degree ``<= n``.
A witness for length ``L`` is valid when a certified upper bound for the
length of ``a b^n`` is at most ``L``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .covers import NotFoundUpTo, min_simple_lift_degree
from .hyperbolic import (PantsMetric, geodesic_length, gamma_n_length_bound, ortho_distance,
                         pants_holonomy, thrice_punctured_holonomy, trace_to_length)
from .intersection import self_intersection
from .ribbon import pants_base
from .words import CyclicWord, gamma_n, parse

N_CAP = 2 ** 62


class TooSmallL(ValueError):
    """No witness at this ``L``.

    ``min_L`` is the least length admitting a witness and ``stable_L`` the
    length from which every larger one does.
    """

    def __init__(self, L, min_L, stable_L):
        super().__init__(f"L = {L} is too small; witnesses exist from L = {min_L}")
        self.L = L
        self.min_L = min_L
        self.stable_L = stable_L


class CapExceeded(OverflowError):
    pass


class NotReached(LookupError):
    pass


@dataclass(frozen=True)
class GrowthWitness:
    L: float
    n: int
    word: CyclicWord = field(repr=False)
    length_certificate: float
    degree_bound: int
    f_lower: float
    mode: str = "compact"

    def verify(self) -> bool:
        """Re-check the recorded inequalities from the fields alone."""
        return (
            self.length_certificate <= self.L
            and self.f_lower <= self.degree_bound
            and self.degree_bound == self.n + 1
            and self.word == gamma_n(self.n)
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["word"] = str(self.word)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> GrowthWitness:
        d = dict(d)
        d["word"] = parse(d["word"])
        return cls(**d)


def f_S_lower(n: int) -> tuple[int, CyclicWord]:
    """``n + 1`` together with the curve ``a b^n`` that forces it."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n + 1, gamma_n(n)


def _thresholds(intervals):
    """``(min_L, stable_L)`` for per-``n`` intervals ``(lo, hi, certificate)``.

    The excess ``certificate - lo`` must eventually be nonpositive and
    decrease; the generator is consumed until it is.
    """
    min_L = None
    prev = None
    for lo, hi, cert in intervals:
        start = max(lo, cert)
        if min_L is None and start < hi:
            min_L = start
        if cert <= lo:
            if min_L is None:
                min_L = lo
            if prev is not None and prev[2] < prev[1]:
                return min_L, max(prev[0], prev[2])
            return min_L, lo
        prev = (lo, hi, cert)
    raise AssertionError("interval scan ended without a threshold")


def compact_witness(L: float, B: float, eps: float, l_alpha: float, l_beta: float,
                    D: float) -> GrowthWitness:
    """Witness ``f(L) >= L/(B+eps)`` on a pants with cuffs at most ``B`` long."""
    if not (B > 0 and eps > 0):
        raise ValueError("B and eps must be positive")
    if not (0 <= l_alpha <= B and 0 <= l_beta <= B):
        raise ValueError("cuff lengths must lie in [0, B]")
    if D < 0:
        raise ValueError("D must be nonnegative")
    step = B + eps
    n = math.floor(L / step) if L >= 0 else -1
    cert = gamma_n_length_bound(l_alpha, l_beta, D, n) if n >= 0 else math.inf
    if n < 0 or cert > L:
        def intervals():
            k = 0
            while True:
                yield k * step, (k + 1) * step, gamma_n_length_bound(l_alpha, l_beta, D, k)
                k += 1
        raise TooSmallL(L, *_thresholds(intervals()))
    return GrowthWitness(L, n, gamma_n(n), cert, n + 1, L / step, "compact")


def _cusped_certificate(n, s, B, exact):
    if exact:
        return trace_to_length(2 + 4 * n)
    return B - 2 * math.log(s) + 1 + 2 * math.log(n)


def cusped_witness(L: float, eps: float, s: float = 1.0, B: float = 0.0,
                   exact: bool = False) -> GrowthWitness:
    """Witness ``f(L) >= exp(L/(2+eps))`` on a pants with a cusp.

    With ``exact`` the three-punctured sphere is used and the certificate is
    the exact length ``2 arccosh(1 + 2n)``; otherwise it is the detour bound
    with cusp-circle radius ``s`` and cuff bound ``B``.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if not exact and not (s > 0 and B >= 0):
        raise ValueError("need s > 0 and B >= 0")
    rate = 2 + eps
    x = L / rate
    if x > math.log(N_CAP):
        raise CapExceeded(f"n = exp({x}) exceeds 2**62")
    n = math.floor(math.exp(x))
    cert = _cusped_certificate(n, s, B, exact) if n >= 1 else math.inf
    if n < 1 or cert > L:
        def intervals():
            k = 1
            while True:
                yield rate * math.log(k), rate * math.log(k + 1), _cusped_certificate(k, s, B, exact)
                k += 1
        raise TooSmallL(L, *_thresholds(intervals()))
    mode = "three-punctured" if exact else "cusped"
    return GrowthWitness(L, n, gamma_n(n), cert, n + 1, math.exp(x), mode)


def length_defect(n):
    """``2 arccosh(1 + 2n) - 2 log n``; tends to ``2 log 4``."""
    n = np.asarray(n, dtype=float)
    return 2 * np.arccosh(1 + 2 * n) - 2 * np.log(n)


def find_threshold_n0(eps: float, n_max: int = 10 ** 6) -> int:
    """Least ``n0`` with ``2 arccosh(1+2n) <= (2+eps) log n`` for all ``n0 <= n <= n_max``."""
    if not eps > 0:
        raise ValueError("eps must be positive")
    n = np.arange(1, n_max + 1, dtype=float)
    ok = 2 * np.arccosh(1 + 2 * n) <= (2 + eps) * np.log(n)
    if not ok[-1]:
        raise NotReached(f"inequality fails at n = {n_max} for eps = {eps}")
    bad = np.flatnonzero(~ok)
    return int(bad[-1]) + 2 if bad.size else 1


@dataclass(frozen=True)
class GrowthRow:
    n: int
    intersection: int | None
    deg_lower: int
    deg_exhaustive: int | None
    length: float
    certificate: float | None
    L: float | None
    f_lower: int


CSV_COLUMNS = ("n", "intersection", "deg_lower", "deg_exhaustive", "length", "certificate", "L", "f_lower")


def growth_table(n_max: int, mode: str = "cusps", metric: PantsMetric | None = None,
                 exhaustive_cap: int = -1, intersection_cap: int = 200,
                 s: float = 1.0, B: float = 0.0, catalog=None, jobs: int = 1) -> list:
    """Rows for ``a b^n``, ``0 <= n <= n_max``.

    ``mode`` is ``"cusps"`` (three-punctured sphere, exact lengths),
    ``"pants"`` (compact ``metric``, hexagon certificate) or ``"cusped"``
    (``metric`` with ``l2 = 0``, detour certificate with ``s`` and ``B``).
    ``deg_exhaustive`` is searched only for ``n <= exhaustive_cap``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if mode == "cusps":
        rep = thrice_punctured_holonomy()
    elif mode in ("pants", "cusped"):
        if metric is None:
            raise ValueError(f"mode {mode!r} needs a metric")
        if mode == "cusped" and metric.l2 != 0:
            raise ValueError("cusped mode needs the b cuff to be a cusp (l2 = 0)")
        rep = pants_holonomy(metric)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    D = ortho_distance(metric) if mode == "pants" else None
    base = pants_base()
    rows = []
    for n in range(n_max + 1):
        w = gamma_n(n)
        length = geodesic_length(rep, w)
        if mode == "cusps":
            cert = length
        elif mode == "pants":
            cert = gamma_n_length_bound(metric.l1, metric.l2, D, n)
        else:
            cert = _cusped_certificate(n, s, B, False) if n >= 1 else None
        deg = None
        if n <= exhaustive_cap:
            try:
                deg = min_simple_lift_degree(w, n + 1, base, catalog=catalog, jobs=jobs).degree
            except NotFoundUpTo:
                deg = None
        inter = self_intersection(w, base) if n <= intersection_cap else None
        rows.append(GrowthRow(n, inter, n + 1, deg, length, cert, cert, n + 1))
    return rows


def table_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v)
                         for v in (getattr(r, c) for c in CSV_COLUMNS)])
    return buf.getvalue()
