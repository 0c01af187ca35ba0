"""The Z^3 lattice of extended gradings and its combinatorial decompositions.

A grading is a triple (a, b, c) recording multiplicities of the trivial
character R, the sign character L, and the tautological twist class w.  The
distinguished subsets E_i, F_j and G_{i,j} are "lines": each meets the plane
P_n = {c = n} in exactly one point.  D_{p,q} is the inductively defined set
of gradings in which the free-module generators of the (p, q) ring live, and
L_i^{[p,q]} is its decomposition into p+q lines, glued from G-pieces along
the half-spaces H^+_n = {c >= n} and H^-_n = {c <= n}.

Infinite sets are handled lazily: callers ask for per-plane slices or
membership, never for whole sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

INF = float("inf")


def is_finite(x) -> bool:
    return x != INF


def _check_extended_nat(value, name: str) -> None:
    if value == INF:
        return
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer or INF, got {value!r}")


@dataclass(frozen=True, slots=True)
class Grading:
    """A point a*R + b*L + c*w of the rank-three grading lattice."""

    a: int
    b: int
    c: int

    def __add__(self, other: "Grading") -> "Grading":
        return Grading(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "Grading") -> "Grading":
        return Grading(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "Grading":
        return Grading(-self.a, -self.b, -self.c)

    def __mul__(self, k: int) -> "Grading":
        return Grading(k * self.a, k * self.b, k * self.c)

    __rmul__ = __mul__

    @property
    def total_degree(self) -> int:
        """|alpha| of the plane part: a + b."""
        return self.a + self.b

    @property
    def fixed_degree(self) -> int:
        """alpha^G of the plane part: a."""
        return self.a

    @property
    def plane(self) -> int:
        return self.c

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


ZERO = Grading(0, 0, 0)
R = Grading(1, 0, 0)
LAMBDA = Grading(0, 1, 0)
M = Grading(0, 2, 0)
OMEGA = Grading(0, 0, 1)
CHI_OMEGA = Grading(2, 2, -1)          # -w + 2 + M
OMEGA_MINUS_2 = Grading(-2, 0, 1)
CHI_OMEGA_MINUS_2 = Grading(0, 2, -1)  # -w + M


@dataclass(frozen=True, slots=True)
class PlaneDecomposition:
    """A grading split as n*w + alpha1*R + alpha2*L."""

    n: int
    alpha1: int
    alpha2: int

    @classmethod
    def of(cls, g: Grading) -> "PlaneDecomposition":
        return cls(n=g.c, alpha1=g.a, alpha2=g.b)

    def to_grading(self) -> Grading:
        return Grading(self.alpha1, self.alpha2, self.n)

    @property
    def total_degree(self) -> int:
        return self.alpha1 + self.alpha2

    @property
    def fixed_degree(self) -> int:
        return self.alpha1


def e_point(i: int, n: int) -> Grading:
    """E_i meets P_n at (-2(n-i), 0, n)."""
    return Grading(-2 * (n - i), 0, n)


def f_point(j: int, n: int) -> Grading:
    """F_j meets P_n at (2j, -2n, n)."""
    return Grading(2 * j, -2 * n, n)


def g_point(i: int, j: int, n: int) -> Grading:
    """G_{i,j} meets P_n; G_{i,0} = E_{i-1} and G_{0,j} = F_{j-1}.

    For i, j >= 1 the two half-line formulas agree at the corner n = i - j.
    """
    if i == 0 and j == 0:
        raise ValueError("G_{0,0} is undefined")
    if j == 0:
        return e_point(i - 1, n)
    if i == 0:
        return f_point(j - 1, n)
    if n <= i - j:
        return Grading(2 * (i - n - 1), 2 * j, n)
    return Grading(2 * (j - 1), 2 * (i - n), n)


@dataclass(frozen=True, slots=True)
class LineId:
    """Index of the line L_i^{[p,q]}; valid for finite p, q with p+q > 0."""

    p: int
    q: int
    i: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise ValueError("line functions require finite p, q")
        if self.p < 0 or self.q < 0 or self.p + self.q == 0:
            raise ValueError(f"invalid parameters ({self.p}, {self.q})")
        if not 0 <= self.i <= self.p + self.q - 1:
            raise ValueError(f"line index {self.i} out of range for ({self.p}, {self.q})")


def line_point(line: LineId | tuple[int, int, int], n: int) -> Grading:
    """The unique point of L_i^{[p,q]} on the plane P_n.

    The governing G_{i',j'} is selected by the three-regime case analysis on
    i relative to min(p,q) and max(p,q); adjacent regions overlap on their
    boundary planes, where the G values agree.
    """
    if not isinstance(line, LineId):
        line = LineId(*line)
    p, q, i = line.p, line.q, line.i
    lo, hi = min(p, q), max(p, q)

    if i <= lo - 1:
        if n <= -i:
            return g_point(0, i + 1, n)
        if n >= i:
            return g_point(i + 1, 0, n)
        # interior piece G_{i+1-j, j} lives on i-2j <= c <= i-2j+2
        j = (i - n + 1) // 2
        return g_point(i + 1 - j, j, n)

    if i < hi - 1:
        mu = min(p, i + 1)
        if n <= 2 * mu - i - 2 * lo:
            return g_point(mu - lo, i + 1 - mu + lo, n)
        if n >= 2 * mu - i - 2:
            return g_point(mu, i + 1 - mu, n)
        j = (2 * mu - i - n) // 2
        return g_point(mu - j, i + 1 - mu + j, n)

    nu = p + q - 1 - i
    if nu == 0:
        return g_point(p, q, n)
    if n <= p - q - nu + 1:
        return g_point(p - nu, q, n)
    if n >= p - q + nu - 1:
        return g_point(p, q - nu, n)
    j = (p - q + nu - n + 1) // 2
    return g_point(p - j, q - nu + j, n)


def d_slice(p: int, q: int, n: int) -> tuple[Grading, ...]:
    """D_{p,q} intersected with P_n, ordered by line index."""
    if p + q <= 0:
        raise ValueError("d_slice requires p + q > 0")
    return tuple(line_point(LineId(p, q, i), n) for i in range(p + q))


@lru_cache(maxsize=None)
def d_slice_set(p: int, q: int, n: int) -> frozenset[Grading]:
    return frozenset(d_slice(p, q, n))


@lru_cache(maxsize=None)
def d_slice_by_recursion(p: int, q: int, n: int) -> frozenset[Grading]:
    """Per-plane slice computed straight from the inductive definition of D.

    Kept separate from the line decomposition so the two can be compared.
    """
    if p + q <= 0:
        raise ValueError("requires p + q > 0")
    if q == 0:
        return frozenset(e_point(i, n) for i in range(p))
    if p == 0:
        return frozenset(f_point(j, n) for j in range(q))
    out: set[Grading] = {g_point(p, q, n)}
    if n >= p - q:
        out |= d_slice_by_recursion(p, q - 1, n)
    if n <= p - q:
        out |= d_slice_by_recursion(p - 1, q, n)
    return frozenset(out)


def in_basis_set(p: int, q: int, g: Grading) -> bool:
    """Whether g lies in D_{p,q} (finite parameters only)."""
    return g in d_slice_set(p, q, g.c)


# ---------------------------------------------------------------------------
# Line-valued functions and the order relations between them.

GradingFunc = Callable[[int], Grading]


def e_func(i: int) -> GradingFunc:
    return lambda n: e_point(i, n)


def f_func(j: int) -> GradingFunc:
    return lambda n: f_point(j, n)


def g_func(i: int, j: int) -> GradingFunc:
    if i == 0 and j == 0:
        raise ValueError("G_{0,0} is undefined")
    return lambda n: g_point(i, j, n)


def line_func(p: int, q: int, i: int) -> GradingFunc:
    line = LineId(p, q, i)
    return lambda n: line_point(line, n)


def leq_at(f: GradingFunc, g: GradingFunc, n: int) -> bool:
    """Pointwise dominance: (i) f1 = g1 or f1 <= g1 - 2, (ii) sum drops by 2."""
    fv, gv = f(n), g(n)
    if not (fv.a == gv.a or fv.a <= gv.a - 2):
        return False
    return fv.a + fv.b <= gv.a + gv.b - 2


def lt_at(f: GradingFunc, g: GradingFunc, n: int) -> bool:
    """Strict variant: the equality option in condition (i) is dropped."""
    fv, gv = f(n), g(n)
    return fv.a <= gv.a - 2 and fv.a + fv.b <= gv.a + gv.b - 2


def rel_leq(f: GradingFunc, g: GradingFunc, window: Iterable[int]) -> bool:
    """f <= g over the window.  Not reflexive: condition (ii) always fails on
    f = g."""
    return all(leq_at(f, g, n) for n in window)


def rel_lt(f: GradingFunc, g: GradingFunc, window: Iterable[int]) -> bool:
    return all(lt_at(f, g, n) for n in window)


# ---------------------------------------------------------------------------
# The nonvanishing pattern of the coefficient ring.

def may_be_nonzero(alpha1: int, alpha2: int) -> bool:
    """Whether the coefficient module can be nonzero in alpha1*R + alpha2*L.

    Encodes the checkerboard of the Burnside-coefficient cohomology of a
    point: the full column over alpha1 = 0; even columns alpha1 = -2j with
    alpha2 >= 2j (the xi^j e^k wedge); lone classes on the odd part of the
    upper anti-diagonal; the lower anti-diagonal alpha2 = -alpha1; and
    columns hanging under its odd points from alpha1 = 3 on.  The gap at
    (1, -2) is what forces the degree-based vanishing of boundary maps.
    """
    if alpha1 == 0:
        return True
    if alpha1 < 0:
        if alpha1 % 2 == 0:
            return alpha2 >= -alpha1
        return alpha2 == -alpha1
    if alpha2 == -alpha1:
        return True
    return alpha1 % 2 == 1 and alpha1 >= 3 and alpha2 <= -alpha1
