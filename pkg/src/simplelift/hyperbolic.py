"""Holonomy of hyperbolic pairs of pants and lengths of closed geodesics.

Isometries of the upper half plane are stored as 2x2 real matrices of
determinant one.  Entries may be Python ints, in which case products stay
exact.  Signs of traces are never normalised; lengths only use ``|tr|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import CyclicWord

PARABOLIC_TOL = 1e-9
DET_TOL = 1e-12


class Elliptic(ValueError):
    pass


class NoRealSolution(ValueError):
    pass


@dataclass(frozen=True)
class Isometry:
    a: float
    b: float
    c: float
    d: float

    def __matmul__(self, other: Isometry) -> Isometry:
        return Isometry(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def inverse(self) -> Isometry:
        # determinant one
        return Isometry(self.d, -self.b, -self.c, self.a)

    def power(self, k: int) -> Isometry:
        if k < 0:
            return self.inverse().power(-k)
        result = IDENTITY
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def kind(self) -> str:
        t = abs(self.trace)
        if abs(t - 2) <= PARABOLIC_TOL:
            return "parabolic"
        return "hyperbolic" if t > 2 else "elliptic"

    def check(self, tol=DET_TOL) -> Isometry:
        if abs(self.det - 1) > tol:
            raise ValueError(f"determinant {self.det} is not 1")
        return self

    def as_list(self):
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Isometry(1, 0, 0, 1)


def trace_to_length(t: float) -> float:
    """Translation length ``2 arccosh(|t|/2)`` of an element with trace ``t``."""
    h = abs(t) / 2
    if h < 1 - PARABOLIC_TOL / 2:
        raise Elliptic(f"|trace| = {abs(t)} < 2")
    if h <= 1 + PARABOLIC_TOL / 2:
        return 0.0
    # log form; h*h would overflow long before h does
    r = 1 / h
    return 2 * (math.log(h) + math.log1p(math.sqrt((1 - r) * (1 + r))))


@dataclass(frozen=True)
class PantsMetric:
    """Cuff lengths of a pair of pants; a length of 0 is a cusp."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        if min(self.l1, self.l2, self.l3) < 0:
            raise ValueError("cuff lengths must be nonnegative")

    def as_tuple(self):
        return (self.l1, self.l2, self.l3)


@dataclass(frozen=True)
class HolonomyRep:
    """Images of the generators ``a`` and ``b``; the third cuff is ``aB``."""

    A: Isometry
    B: Isometry

    def generators(self):
        return (self.A, self.B)

    def image(self, w: CyclicWord) -> Isometry:
        if w.rank != 2:
            raise ValueError("pants holonomy needs a rank-2 word")
        gens = self.generators()
        result = IDENTITY
        letters = list(w)
        k = 0
        # runs of one letter are raised by repeated squaring
        while k < len(letters):
            x = letters[k]
            run = 1
            while k + run < len(letters) and letters[k + run] == x:
                run += 1
            result = result @ gens[x.generator].power(run * x.sign)
            k += run
        return result

    def cuff_traces(self):
        return (self.A.trace, self.B.trace, (self.A @ self.B.inverse()).trace)


def thrice_punctured_holonomy() -> HolonomyRep:
    """Exact integer holonomy of the three-punctured sphere."""
    return HolonomyRep(Isometry(1, 2, 0, 1), Isometry(1, 0, 2, 1))


def pants_holonomy(m: PantsMetric) -> HolonomyRep:
    """A holonomy with ``|tr A|, |tr B|, |tr AB^-1|`` matching the cuff lengths.

    ``A`` is upper and ``B`` lower triangular; the lower-left entry of ``B``
    is the positive root that makes ``tr AB^-1 = -2 cosh(l3/2)``.
    """
    if m.l1 > 0:
        lam, top = math.exp(m.l1 / 2), 1.0
    else:
        lam, top = 1.0, 2.0
    mu = math.exp(m.l2 / 2)
    t3 = 2 * math.cosh(m.l3 / 2)
    c = (lam / mu + mu / lam + t3) / top
    if not c > 0:
        raise NoRealSolution(f"no admissible holonomy for {m}")
    A = Isometry(lam, top, 0.0, 1 / lam)
    B = Isometry(mu, 0.0, c, 1 / mu)
    return HolonomyRep(A, B)


def geodesic_length(rep: HolonomyRep, w: CyclicWord) -> float:
    """Length of the closed geodesic in the class of ``w`` (0 for a cusp)."""
    return trace_to_length(rep.image(w).trace)


def gamma_n_length_bound(l_alpha: float, l_beta: float, D: float, n: int) -> float:
    """Length of ``a b^n`` drawn as a cuff, ``n`` turns round the other and the seam twice."""
    if min(l_alpha, l_beta, D) < 0 or n < 0:
        raise ValueError("inputs must be nonnegative")
    return l_alpha + n * l_beta + 2 * D


def ortho_distance(m: PantsMetric) -> float:
    """Distance between the first two cuffs, from the right-angled hexagon."""
    if m.l1 <= 0 or m.l2 <= 0:
        raise ValueError("a cusp has no orthogeodesic foot")
    h1, h2, h3 = m.l1 / 2, m.l2 / 2, m.l3 / 2
    return math.acosh((math.cosh(h3) + math.cosh(h1) * math.cosh(h2)) / (math.sinh(h1) * math.sinh(h2)))


def cusp_detour_length(y: float, s: float, n: int) -> float:
    """Length of the path up from height ``s`` to ``y``, across ``n`` and back down."""
    if not (s > 0 and y >= s and n >= 0):
        raise ValueError("need y >= s > 0 and n >= 0")
    return 2 * math.log(y / s) + n / y
