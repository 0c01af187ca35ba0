"""Graded elements of the (p, q) ring, canonical monomial normal form,
multiplication, the basis recursion, and the Laurent models of the two
fixed-point rings.

A monomial is an exponent vector (a, b, m, n) standing for

    c_{w-2}^a  c_{xw-2}^b  c_w^m  c_xw^n

with m, n >= 0 and signed a, b.  Negative a encodes the divisible classes
c_{w-2}^{-k} c_w^m c_xw^q (only defined when n >= q), negative b encodes
c_{xw-2}^{-k} c_w^p c_xw^n (only when m >= p).  Elements are finite
Scalar-linear combinations of canonical monomials, homogeneous in the
grading lattice.

Normal form is reached by exhaustively applying, in priority order per
monomial:

    Z   m >= p and n >= q                      -> drop the term
    X1  a != 0, b != 0, not both negative      -> (a-1, b-1), times xi
    X2  a < 0 and b < 0                        -> only legal with m >= p and
                                                  n >= q, which Z already ate
    D1  a = 0, b <= 1, m > p                   -> binomial expansion onto
                                                  (0, b-(m-p)-l, p, n+l)
    D2  b = 0, a <= 0, n > q                   -> mirror expansion
    E1  a > 0, b = 0, m >= p                   -> (a-1, -1), times xi
    E2  b > 0, a = 0, n >= q                   -> (-1, b-1), times xi
    S+  a > 0, n > 0                           -> e^2*(a-1,b,m,n-1)
                                                  + (1-kappa)*(a-1,b+1,m+1,n-1)
    S-  b >= 2, m > 0                          -> e^2*(a,b-1,m-1,n)
                                                  + (1-kappa)*(a+1,b-1,m-1,n+1)

Rules mentioning p (resp. q) are vacuous when that index is infinite.  The
canonical-monomial characterization is a derived one, so every normal form
is checked against the basis-grading set D_{p,q} at runtime (finite case).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple

from .grading import (
    CHI_OMEGA,
    Grading,
    OMEGA,
    d_slice,
    in_basis_set,
    is_finite,
    _check_extended_nat,
)
from .scalar import CoefficientMode, E2, ONE, ONE_MINUS_KAPPA, Scalar, XI


class RingError(Exception):
    """Base class for ring-engine errors."""


class IllegalDivisibleClass(RingError):
    """A negative exponent that no rewrite can legitimize."""


class InfiniteDivisor(RingError):
    """A divisible class requested for an infinite index."""


class GradingNotInBasis(RingError):
    """basis_monomial called off the generator set D_{p,q}."""


class InhomogeneousElement(RingError):
    """Raw input mixes more than one total grading."""


class CanonicalFormError(RingError):
    """Internal-consistency failure of the rewrite engine."""


@dataclass(frozen=True, slots=True)
class RingParams:
    """Ambient space parameters: p, q in {0, 1, ..., INF}, p + q > 0."""

    p: int | float
    q: int | float
    mode: CoefficientMode = CoefficientMode.BURNSIDE

    def __post_init__(self):
        _check_extended_nat(self.p, "p")
        _check_extended_nat(self.q, "q")
        if self.p + self.q <= 0:
            raise ValueError("p + q must be positive")

    @property
    def finite(self) -> bool:
        return is_finite(self.p) and is_finite(self.q)

    def describe(self) -> str:
        fmt = lambda v: "inf" if not is_finite(v) else str(v)
        return f"p={fmt(self.p)},q={fmt(self.q)},mode={self.mode.value}"


class Monomial(NamedTuple):
    a: int  # exponent of c_{w-2}
    b: int  # exponent of c_{xw-2}
    m: int  # exponent of c_w
    n: int  # exponent of c_xw

    def grading(self) -> Grading:
        return Grading(
            -2 * self.a + 2 * self.n,
            2 * self.b + 2 * self.n,
            self.a - self.b + self.m - self.n,
        )


Vec = tuple[int, int, int, int]

MONO_ONE = Monomial(0, 0, 0, 0)
MONO_CW = Monomial(0, 0, 1, 0)
MONO_CXW = Monomial(0, 0, 0, 1)
MONO_CWM2 = Monomial(1, 0, 0, 0)
MONO_CXWM2 = Monomial(0, 1, 0, 0)


def _vec_grading(vec: Vec) -> Grading:
    a, b, m, n = vec
    return Grading(-2 * a + 2 * n, 2 * b + 2 * n, a - b + m - n)


def _vec_mul(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3])


def _print_order_key(mono: Monomial) -> tuple[int, int, int, int]:
    return (mono.n, mono.m, mono.b, mono.a)


class Element:
    """A homogeneous Scalar-combination of canonical monomials.

    Zero keeps the grading it was computed in (or None when unknowable).
    Equality looks at the terms only; the grading is derived data.
    """

    __slots__ = ("_terms", "_grading")

    def __init__(self, terms: dict[Monomial, Scalar], grading: Grading | None):
        self._terms = {m: s for m, s in terms.items() if s}
        self._grading = grading

    @classmethod
    def zero(cls, grading: Grading | None = None) -> "Element":
        return cls({}, grading)

    @property
    def grading(self) -> Grading | None:
        return self._grading

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: _print_order_key(kv[0]))

    def pairs(self) -> list[tuple[Scalar, Vec]]:
        return [(s, tuple(m)) for m, s in self.items()]

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, Scalar())

    def nterms(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        return f"Element({self._terms!r}, grading={self._grading!r})"


# ---------------------------------------------------------------------------
# The rewrite engine.

_RULE_NAMES = ("Z", "X1", "X2", "D1", "D2", "E1", "E2", "S+", "S-")


def _first_rule(vec: Vec, p, q) -> str | None:
    """Highest-priority applicable rule, or None when vec is terminal."""
    a, b, m, n = vec
    if m >= p and n >= q:
        return "Z"
    if a != 0 and b != 0 and not (a < 0 and b < 0):
        return "X1"
    if a < 0 and b < 0:
        return "X2"
    if a == 0 and b <= 1 and m > p:
        return "D1"
    if b == 0 and a <= 0 and n > q:
        return "D2"
    if a > 0 and b == 0 and m >= p:
        return "E1"
    if b > 0 and a == 0 and n >= q:
        return "E2"
    if a > 0 and n > 0:
        return "S+"
    if b >= 2 and m > 0:
        return "S-"
    return None


def _applicable_rules(vec: Vec, p, q) -> list[str]:
    """Rules whose preconditions hold at vec, in priority order."""
    a, b, m, n = vec
    out = []
    if m >= p and n >= q:
        out.append("Z")
    if a != 0 and b != 0 and not (a < 0 and b < 0):
        out.append("X1")
    if a < 0 and b < 0:
        out.append("X2")
    if a == 0 and b <= 1 and m > p:
        out.append("D1")
    if b == 0 and a <= 0 and n > q:
        out.append("D2")
    # E1/E2 substitute the lone companion class; the other divisor exponent
    # must be spent first (X1), or the rewrite would change the grading
    if a > 0 and b == 0 and m >= p:
        out.append("E1")
    if b > 0 and a == 0 and n >= q:
        out.append("E2")
    if a > 0 and n > 0:
        out.append("S+")
    if b >= 2 and m > 0:
        out.append("S-")
    return out


def _apply_rule(rule: str, vec: Vec, p, q) -> list[tuple[Scalar, Vec]]:
    a, b, m, n = vec
    if rule == "Z":
        return []
    if rule == "X1":
        return [(XI, (a - 1, b - 1, m, n))]
    if rule == "X2":
        if m >= p and n >= q:
            return []
        raise IllegalDivisibleClass(
            f"monomial {vec} has two negative divisor exponents but m < p or n < q"
        )
    if rule == "D1":
        d = m - p
        out = []
        for l in range(d + 1):
            if n + l >= q:
                continue
            out.append((Scalar.term(2 * (d - l), l, comb(d, l)), (0, b - d - l, p, n + l)))
        return out
    if rule == "D2":
        d = n - q
        out = []
        for l in range(d + 1):
            if m + l >= p:
                continue
            out.append((Scalar.term(2 * (d - l), l, comb(d, l)), (a - d - l, 0, m + l, q)))
        return out
    if rule == "E1":
        return [(XI, (a - 1, -1, m, n))]
    if rule == "E2":
        return [(XI, (-1, b - 1, m, n))]
    if rule == "S+":
        return [
            (E2, (a - 1, b, m, n - 1)),
            (ONE_MINUS_KAPPA, (a - 1, b + 1, m + 1, n - 1)),
        ]
    if rule == "S-":
        return [
            (E2, (a, b - 1, m - 1, n)),
            (ONE_MINUS_KAPPA, (a + 1, b - 1, m - 1, n + 1)),
        ]
    raise AssertionError(rule)


def _is_canonical(vec: Vec, p, q) -> bool:
    a, b, m, n = vec
    if a and b:
        return False
    if m >= p and n >= q:
        return False
    if a > 0:
        return n == 0 and m < p
    if a < 0:
        return n == q and m < p
    if b >= 2:
        return m == 0 and n < q
    if b == 1:
        return m <= p and n < q
    if b < 0:
        return m == p and n < q
    return m <= p and n <= q


def _check_legal_entry(vec: Vec, p, q) -> None:
    a, b, _, _ = vec
    if b < 0 and not is_finite(p):
        raise InfiniteDivisor(f"c_xwm2^{b} class requested with p = inf in {vec}")
    if a < 0 and not is_finite(q):
        raise InfiniteDivisor(f"c_wm2^{a} class requested with q = inf in {vec}")


_FUEL = 200_000


def _reduce(
    pending: list[tuple[Scalar, Vec]],
    params: RingParams,
    rule_picker=None,
) -> dict[Monomial, Scalar]:
    """Drive the worklist to canonical form.

    rule_picker, when given, chooses among the applicable rules (used by the
    confluence harness); the default takes the highest-priority rule.
    """
    p, q, mode = params.p, params.q, params.mode
    acc: dict[Monomial, Scalar] = {}
    fuel = _FUEL
    while pending:
        s, vec = pending.pop()
        if rule_picker is None:
            rule = _first_rule(vec, p, q)
        else:
            rules = _applicable_rules(vec, p, q)
            rule = rule_picker(rules) if rules else None
        if rule is None:
            if not _is_canonical(vec, p, q):
                raise IllegalDivisibleClass(
                    f"exponent vector {vec} cannot be reduced to a canonical "
                    f"monomial at ({params.describe()})"
                )
            mono = Monomial(*vec)
            total = acc.get(mono)
            acc[mono] = (total + s).in_mode(mode) if total is not None else s
            if not acc[mono]:
                del acc[mono]
            continue
        fuel -= 1
        if fuel < 0:
            raise CanonicalFormError("rewrite did not terminate within fuel budget")
        for mult, nv in _apply_rule(rule, vec, p, q):
            ns = (s * mult).in_mode(mode)
            if ns:
                pending.append((ns, nv))
    return acc


def _prepare(raw: Iterable[tuple[Scalar, Vec]], params: RingParams):
    """Mode-reduce, split into graded components, and fix the total grading."""
    pending: list[tuple[Scalar, Vec]] = []
    grading: Grading | None = None
    for s, vec in raw:
        vec = tuple(vec)
        _check_legal_entry(vec, params.p, params.q)
        s = s.in_mode(params.mode)
        if not s:
            continue
        base = _vec_grading(vec)
        for comp in s.graded_components():
            g = base + comp.grading()
            if grading is None:
                grading = g
            elif g != grading:
                raise InhomogeneousElement(
                    f"raw input mixes gradings {grading.astuple()} and {g.astuple()}"
                )
            pending.append((comp, vec))
    return pending, grading


def _check_output(acc: dict[Monomial, Scalar], params: RingParams) -> None:
    if not params.finite:
        return
    for mono in acc:
        if not in_basis_set(params.p, params.q, mono.grading()):
            raise CanonicalFormError(
                f"normal form {tuple(mono)} has grading "
                f"{mono.grading().astuple()} outside the basis set at "
                f"({params.describe()})"
            )


def normalize(raw: Iterable[tuple[Scalar, Vec]], params: RingParams) -> Element:
    """Canonical form of a formal Scalar-combination of exponent vectors."""
    pending, grading = _prepare(raw, params)
    acc = _reduce(pending, params)
    _check_output(acc, params)
    return Element(acc, grading)


def normalize_randomized(raw, params: RingParams, rng) -> Element:
    """Like normalize but applying applicable rules in random order.

    Sound because every rule is an identity of the ring; used to test
    confluence of the system rather than trust it.
    """
    pending, grading = _prepare(raw, params)
    acc = _reduce(pending, params, rule_picker=rng.choice)
    _check_output(acc, params)
    return Element(acc, grading)


def normalize_split(raw: Iterable[tuple[Scalar, Vec]], params: RingParams) -> list[Element]:
    """Normalize possibly-inhomogeneous input into homogeneous Elements."""
    by_grading: dict[Grading, list[tuple[Scalar, Vec]]] = {}
    for s, vec in raw:
        vec = tuple(vec)
        s = s.in_mode(params.mode)
        base = _vec_grading(vec)
        for comp in s.graded_components():
            by_grading.setdefault(base + comp.grading(), []).append((comp, vec))
    keys = sorted(by_grading, key=lambda g: g.astuple())
    out = [normalize(by_grading[g], params) for g in keys]
    return [el for el in out if not el.is_zero()] or (
        [Element.zero()] if not out else [out[0]]
    )


def mul(x: Element, y: Element, params: RingParams) -> Element:
    """Product: exponentwise monomial addition, Scalar products, normalize."""
    raw = []
    for mx, sx in x.items():
        for my, sy in y.items():
            raw.append((sx * sy, _vec_mul(tuple(mx), tuple(my))))
    el = normalize(raw, params)
    if el.is_zero() and el.grading is None and x.grading and y.grading:
        return Element.zero(x.grading + y.grading)
    return el


def add(x: Element, y: Element, params: RingParams) -> Element:
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    if x.grading != y.grading:
        raise InhomogeneousElement("cannot add elements of different gradings")
    return normalize(x.pairs() + y.pairs(), params)


def scale(s: Scalar, x: Element, params: RingParams) -> Element:
    return normalize([(s * sx, tuple(mx)) for mx, sx in x.items()], params)


def element_from_vec(vec: Vec, params: RingParams, coeff: Scalar = ONE) -> Element:
    return normalize([(coeff, vec)], params)


# ---------------------------------------------------------------------------
# Basis monomials via the push-forward recursion.

@lru_cache(maxsize=None)
def _basis_vec(p: int, q: int, alpha: Grading) -> Vec:
    """Exponent vector of the basis monomial at alpha in the (p, q) ring.

    Base cases: the Laurent bases of the fixed rings when p*q = 0, and
    pure c_{w-2} / c_{xw-2} powers on the line L_0.  Otherwise recurse by
    the normalized push-forwards: multiply by c_w stepping from (p-1, q)
    when the plane is >= 0, by c_xw stepping from (p, q-1) when < 0.
    """
    if not in_basis_set(p, q, alpha):
        raise GradingNotInBasis(
            f"grading {alpha.astuple()} is not a basis grading for ({p}, {q})"
        )
    if q == 0:
        k = alpha.c + alpha.a // 2
        return (alpha.c - k, 0, k, 0)
    if p == 0:
        k = alpha.a // 2
        return (0, -alpha.c - k, 0, k)
    l0 = (
        Grading(-2 * alpha.c, 0, alpha.c)
        if alpha.c >= 0
        else Grading(0, -2 * alpha.c, alpha.c)
    )
    if alpha == l0:
        return (alpha.c, 0, 0, 0) if alpha.c >= 0 else (0, -alpha.c, 0, 0)
    if alpha.c >= 0:
        a, b, m, n = _basis_vec(p - 1, q, alpha - OMEGA)
        return (a, b, m + 1, n)
    a, b, m, n = _basis_vec(p, q - 1, alpha - CHI_OMEGA)
    return (a, b, m, n + 1)


def basis_monomial(params: RingParams, alpha: Grading) -> Element:
    """The canonical basis monomial at alpha, a one-term unit-coefficient
    Element."""
    if not params.finite:
        raise GradingNotInBasis("basis monomials require finite p and q")
    vec = _basis_vec(params.p, params.q, alpha)
    el = normalize([(ONE, vec)], params)
    if el.nterms() != 1 or el.coefficient(Monomial(*vec)) != ONE:
        raise CanonicalFormError(
            f"basis recursion produced a non-monomial value at {alpha.astuple()}"
        )
    return el


def basis_slice(params: RingParams, n: int) -> list[tuple[Grading, Element]]:
    """Basis monomials on the plane P_n, in line order."""
    if not params.finite:
        raise GradingNotInBasis("basis slices require finite p and q")
    return [
        (alpha, basis_monomial(params, alpha))
        for alpha in d_slice(params.p, params.q, n)
    ]


def canonical_monomials_plane(params: RingParams, n: int) -> list[Monomial]:
    """All canonical monomials whose grading lies on P_n, in line order.

    Closed-form enumeration of the terminal states of the rewrite system;
    used to cross-check the basis against the grading combinatorics.
    """
    if not params.finite:
        raise ValueError("requires finite p and q")
    p, q = params.p, params.q
    found: list[Monomial] = []
    for m in range(p):  # a > 0, plane a + m
        a = n - m
        if a >= 1:
            found.append(Monomial(a, 0, m, 0))
    for m in range(p):  # a < 0, plane a + m - q
        a = n - m + q
        if a <= -1:
            found.append(Monomial(a, 0, m, q))
    for m in range(p + 1):  # a = b = 0
        nn = m - n
        if 0 <= nn <= q and not (m == p and nn == q):
            found.append(Monomial(0, 0, m, nn))
    for m in range(p + 1):  # b = 1
        nn = m - n - 1
        if 0 <= nn <= q - 1:
            found.append(Monomial(0, 1, m, nn))
    for nn in range(q):  # b >= 2, m = 0
        b = -n - nn
        if b >= 2:
            found.append(Monomial(0, b, 0, nn))
    for nn in range(q):  # b < 0, m = p
        b = p - nn - n
        if b <= -1:
            found.append(Monomial(0, b, p, nn))
    order = {g: i for i, g in enumerate(d_slice(p, q, n))}
    return sorted(found, key=lambda mono: order[mono.grading()])


# ---------------------------------------------------------------------------
# The fixed rings: Laurent in one companion class, truncated in one Euler
# class.

@dataclass(frozen=True)
class FixedRingElement:
    """An element of the side-0 ring (Laurent in c_{w-2}, c_w^p = 0) or the
    side-1 ring (Laurent in c_{xw-2}, c_xw^q = 0)."""

    side: int
    truncation: int | float
    element: Element = field(compare=True)

    def laurent_terms(self) -> list[tuple[int, int, Scalar]]:
        """(laurent exponent, nilpotent exponent, coefficient) triples."""
        out = []
        for mono, s in self.element.items():
            if self.side == 0:
                out.append((mono.a, mono.m, s))
            else:
                out.append((mono.b, mono.n, s))
        return out

    def is_zero(self) -> bool:
        return self.element.is_zero()


def _fixed_params(side: int, params: RingParams) -> RingParams:
    if side == 0:
        if params.p < 1:
            raise ValueError("side 0 fixed ring requires p >= 1")
        return RingParams(params.p, 0, params.mode)
    if side == 1:
        if params.q < 1:
            raise ValueError("side 1 fixed ring requires q >= 1")
        return RingParams(0, params.q, params.mode)
    raise ValueError(f"side must be 0 or 1, got {side}")


def fixed_ring_normalize(
    side: int, params: RingParams, raw: Iterable[tuple[Scalar, Vec]]
) -> FixedRingElement:
    """Express raw in the side's Laurent model.

    The substitutions for the other side's classes (e.g. c_{xw-2} ->
    xi * c_{w-2}^{-1} on side 0) are exactly what the rewrite rules perform
    at the degenerate parameters (p, 0) resp. (0, q).
    """
    fixed = _fixed_params(side, params)
    el = normalize(raw, fixed)
    trunc = fixed.p if side == 0 else fixed.q
    return FixedRingElement(side=side, truncation=trunc, element=el)


def fixed_mul(x: FixedRingElement, y: FixedRingElement, params: RingParams) -> FixedRingElement:
    if x.side != y.side:
        raise ValueError("cannot multiply elements of different fixed components")
    fixed = _fixed_params(x.side, params)
    return FixedRingElement(x.side, x.truncation, mul(x.element, y.element, fixed))
