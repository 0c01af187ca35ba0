"""Coefficient arithmetic: the fragment Z[e, xi, kappa] of the coefficient
ring, and the order-eight unit group of the degree-zero part.

Multiplication is subject to

    kappa * xi  = 0,
    kappa^2     = 2 * kappa,
    e^i * kappa = 2 * e^i        (i > 0),

which force every mixed monomial e^i xi^j with i, j >= 1 to be 2-torsion:
2 e^i xi^j = (e^i kappa) xi^j = e^i (kappa xi) xi^(j-1) = 0.  Normal form
therefore stores mixed coefficients mod 2, and kappa as a separate term that
never co-occurs with e or xi.  Constant-Z mode additionally kills kappa and
makes every coefficient of e^i xi^j with i >= 1 mod 2.

The unit epsilon of the degree-zero ring involves a negative power of e and
is not an element of this fragment; it exists only inside UnitTag.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .grading import Grading, ZERO as GRADING_ZERO


class CoefficientMode(enum.Enum):
    BURNSIDE = "burnside"
    CONSTANT_Z = "constz"

    @classmethod
    def parse(cls, text: str) -> "CoefficientMode":
        for mode in cls:
            if mode.value == text:
                return mode
        raise ValueError(f"unknown coefficient mode {text!r}")


def scalar_grading(i: int, j: int) -> Grading:
    """Grading of e^i xi^j; kappa and integers sit in grading zero."""
    return Grading(-2 * j, i + 2 * j, 0)


class Scalar:
    """An element c_00 + sum c_ij e^i xi^j + k*kappa in normal form.

    Immutable by convention; all operations return new values.
    """

    __slots__ = ("_poly", "_kappa")

    def __init__(self, poly: dict[tuple[int, int], int] | None = None, kappa: int = 0):
        norm: dict[tuple[int, int], int] = {}
        if poly:
            for (i, j), c in poly.items():
                if i > 0 and j > 0:
                    c %= 2
                if c:
                    norm[(i, j)] = c
        self._poly = norm
        self._kappa = kappa

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        return cls({(0, 0): n})

    @classmethod
    def term(cls, i: int, j: int, coeff: int = 1) -> "Scalar":
        if i < 0 or j < 0:
            raise ValueError("negative powers of e or xi are outside the fragment")
        return cls({(i, j): coeff})

    @classmethod
    def kappa_term(cls, coeff: int = 1) -> "Scalar":
        return cls(kappa=coeff)

    # -- views --------------------------------------------------------------

    @property
    def kappa(self) -> int:
        return self._kappa

    def poly_items(self) -> list[tuple[tuple[int, int], int]]:
        """Monomial terms sorted lexicographically in (j, i)."""
        return sorted(self._poly.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def is_zero(self) -> bool:
        return not self._poly and self._kappa == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self._poly == other._poly
            and self._kappa == other._kappa
        )

    def __hash__(self) -> int:
        return hash((tuple(self.poly_items()), self._kappa))

    def __repr__(self) -> str:
        return f"Scalar({self._poly!r}, kappa={self._kappa})"

    # -- ring operations (Burnside normal form) -----------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        poly = dict(self._poly)
        for key, c in other._poly.items():
            poly[key] = poly.get(key, 0) + c
        return Scalar(poly, self._kappa + other._kappa)

    def __neg__(self) -> "Scalar":
        return Scalar({k: -c for k, c in self._poly.items()}, -self._kappa)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        poly: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._poly.items():
            for (i2, j2), c2 in other._poly.items():
                key = (i1 + i2, j1 + j2)
                poly[key] = poly.get(key, 0) + c1 * c2
        kappa = 2 * self._kappa * other._kappa
        # kappa times the polynomial part: constants keep kappa, pure
        # e-powers double, anything with xi dies.
        for k, p in ((self._kappa, other._poly), (other._kappa, self._poly)):
            if not k:
                continue
            for (i, j), c in p.items():
                if j:
                    continue
                if i == 0:
                    kappa += k * c
                else:
                    poly[(i, 0)] = poly.get((i, 0), 0) + 2 * k * c
        return Scalar(poly, kappa)

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            raise ValueError("scalars are not invertible in the fragment")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    # -- mode reduction and grading -----------------------------------------

    def in_mode(self, mode: CoefficientMode) -> "Scalar":
        if mode is CoefficientMode.BURNSIDE:
            return self
        poly = {
            (i, j): (c % 2 if i >= 1 else c) for (i, j), c in self._poly.items()
        }
        return Scalar(poly, 0)

    def grading(self) -> Grading | None:
        """Common grading of the terms, or None for zero.

        Raises ValueError when the terms are not all in one grading.
        """
        gradings = {scalar_grading(i, j) for (i, j) in self._poly}
        if self._kappa:
            gradings.add(GRADING_ZERO)
        if not gradings:
            return None
        if len(gradings) > 1:
            raise ValueError(f"inhomogeneous scalar {self!r}")
        return next(iter(gradings))

    def graded_components(self) -> Iterator["Scalar"]:
        """Split into homogeneous pieces; kappa shares grading 0 with 1."""
        grade0 = Scalar({(0, 0): self._poly.get((0, 0), 0)}, self._kappa)
        if grade0:
            yield grade0
        for (i, j), c in self.poly_items():
            if (i, j) != (0, 0):
                yield Scalar({(i, j): c})


ZERO = Scalar()
ONE = Scalar.from_int(1)
MINUS_ONE = Scalar.from_int(-1)
E = Scalar.term(1, 0)
E2 = Scalar.term(2, 0)
XI = Scalar.term(0, 1)
KAPPA = Scalar.kappa_term()
ONE_MINUS_KAPPA = ONE - KAPPA


def scalar_mul(x: Scalar, y: Scalar, mode: CoefficientMode = CoefficientMode.BURNSIDE) -> Scalar:
    return (x * y).in_mode(mode)


def scalar_add(x: Scalar, y: Scalar, mode: CoefficientMode = CoefficientMode.BURNSIDE) -> Scalar:
    return (x + y).in_mode(mode)


def to_constz(x: Scalar) -> Scalar:
    """The constant-Z quotient: kappa -> 0, e-divisible coefficients mod 2."""
    return x.in_mode(CoefficientMode.CONSTANT_Z)


# ---------------------------------------------------------------------------
# The unit group {+-1, +-(1-kappa), +-(1-eps), +-(1-kappa+eps)}.

@dataclass(frozen=True, slots=True)
class UnitTag:
    """A degree-zero unit, every one of which squares to 1.

    The basis part is a Klein four-group generated by 1-kappa and 1-eps,
    with (1-kappa)(1-eps) = 1-kappa+eps; the sign gives order eight.
    """

    sign: int = 1
    minus_kappa: bool = False
    minus_eps: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")

    def __mul__(self, other: "UnitTag") -> "UnitTag":
        return UnitTag(
            self.sign * other.sign,
            self.minus_kappa ^ other.minus_kappa,
            self.minus_eps ^ other.minus_eps,
        )

    def __pow__(self, n: int) -> "UnitTag":
        # every element is self-inverse
        return self if n % 2 else UNIT_ONE

    def basis_name(self) -> str:
        if self.minus_kappa and self.minus_eps:
            return "1-kappa+eps"
        if self.minus_kappa:
            return "1-kappa"
        if self.minus_eps:
            return "1-eps"
        return "1"

    def __str__(self) -> str:
        sign = "+" if self.sign > 0 else "-"
        name = self.basis_name()
        return f"{sign}1" if name == "1" else f"{sign}({name})"

    def as_scalar(self) -> Scalar:
        """The tags not involving eps as elements of the fragment."""
        if self.minus_eps:
            raise ValueError("eps is not an element of the scalar fragment")
        base = ONE_MINUS_KAPPA if self.minus_kappa else ONE
        return base if self.sign > 0 else -base


UNIT_ONE = UnitTag()
UNIT_MINUS_ONE = UnitTag(sign=-1)
UNIT_ONE_MINUS_KAPPA = UnitTag(minus_kappa=True)
UNIT_ONE_MINUS_EPS = UnitTag(minus_eps=True)
UNIT_ONE_MINUS_KAPPA_PLUS_EPS = UnitTag(minus_kappa=True, minus_eps=True)

ALL_UNITS: tuple[UnitTag, ...] = tuple(
    UnitTag(sign, mk, me)
    for sign in (1, -1)
    for mk in (False, True)
    for me in (False, True)
)


def unit_mul(u: UnitTag, v: UnitTag) -> UnitTag:
    return u * v
