"""Restriction along inclusions, normalized push-forwards, fixed-point
restriction, tangent/sphere grading data, and the classical-generator
dictionary.

Restriction re-reads monomials verbatim in the smaller ring and renormalizes;
divisible classes keep their defining property.  Push-forwards are defined by
their proven multiplicative effect: the normalized step in the w-direction is
multiplication by c_w with unit prefactor -(1-eps), in the xw-direction by
c_xw with prefactor -(1-kappa)(1-eps); these prefactors are also the Euler
classes of the dual bundles.  Composite push-forwards multiply the per-step
units (so a mixed (1,1)-step carries (1-kappa), not +1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import CHI_OMEGA, Grading, OMEGA, is_finite
from .ring import (
    Element,
    FixedRingElement,
    RingParams,
    Vec,
    fixed_ring_normalize,
    normalize,
)
from .scalar import (
    ONE,
    UnitTag,
    UNIT_ONE_MINUS_EPS,
    UNIT_ONE_MINUS_KAPPA_PLUS_EPS,
    UNIT_MINUS_ONE,
)

# Unit prefactors of the one-step push-forwards; equal to the dual-bundle
# Euler class units e(w^v) = -(1-eps) c_w and e(xw^v) = -(1-kappa)(1-eps) c_xw.
OMEGA_PUSH_UNIT: UnitTag = UNIT_MINUS_ONE * UNIT_ONE_MINUS_EPS
CHI_OMEGA_PUSH_UNIT: UnitTag = UNIT_MINUS_ONE * UNIT_ONE_MINUS_KAPPA_PLUS_EPS


def _check_mode(a: RingParams, b: RingParams) -> None:
    if a.mode is not b.mode:
        raise ValueError("parameter sets use different coefficient modes")


def restrict(frm: RingParams, to: RingParams, x: Element) -> Element:
    """Restriction along the inclusion of the (to) space into the (frm)
    space: monomials are re-interpreted verbatim and renormalized."""
    _check_mode(frm, to)
    if to.p > frm.p or to.q > frm.q:
        raise ValueError(
            f"restriction requires to <= from, got ({to.describe()}) from ({frm.describe()})"
        )
    el = normalize(x.pairs(), to)
    if el.is_zero() and el.grading is None:
        return Element.zero(x.grading)
    return el


def _shift(x: Element, dm: int, dn: int, target: RingParams) -> Element:
    raw = [(s, (v[0], v[1], v[2] + dm, v[3] + dn)) for s, v in x.pairs()]
    el = normalize(raw, target)
    if el.is_zero() and el.grading is None and x.grading is not None:
        return Element.zero(x.grading + dm * OMEGA + dn * CHI_OMEGA)
    return el


def pushforward_omega(params_target: RingParams, x: Element) -> Element:
    """Normalized w-direction push-forward of an element of the
    (p-1, q) ring: multiplication by c_w in the target.  The raw map is
    OMEGA_PUSH_UNIT times the result."""
    if params_target.p < 1:
        raise ValueError("omega push-forward needs target p >= 1")
    return _shift(x, 1, 0, params_target)


def pushforward_chiomega(params_target: RingParams, x: Element) -> Element:
    """Normalized xw-direction push-forward of an element of the (p, q-1)
    ring; raw map is CHI_OMEGA_PUSH_UNIT times the result."""
    if params_target.q < 1:
        raise ValueError("chi-omega push-forward needs target q >= 1")
    return _shift(x, 0, 1, params_target)


def pushforward_composite(
    frm: RingParams, to: RingParams, x: Element
) -> tuple[UnitTag, Element]:
    """Push-forward along the composite inclusion, as (unit, normalized
    value): the value is c_w^dp c_xw^dq x in the target, the unit the product
    of the per-step units."""
    _check_mode(frm, to)
    if frm.p > to.p or frm.q > to.q:
        raise ValueError("push-forward requires from <= to")
    dp = 0 if frm.p == to.p else to.p - frm.p
    dq = 0 if frm.q == to.q else to.q - frm.q
    if not (is_finite(dp) and is_finite(dq)):
        raise ValueError("push-forward to an infinite index from a finite one")
    unit = (OMEGA_PUSH_UNIT ** dp) * (CHI_OMEGA_PUSH_UNIT ** dq)
    return unit, _shift(x, dp, dq, to)


def eta(params: RingParams, x: Element) -> tuple[FixedRingElement, FixedRingElement]:
    """Restriction to the two fixed-point components, as a pair of fixed-ring
    values.  A ring homomorphism in each component."""
    if params.p < 1 or params.q < 1:
        raise ValueError("eta requires p >= 1 and q >= 1")
    return (
        fixed_ring_normalize(0, params, x.pairs()),
        fixed_ring_normalize(1, params, x.pairs()),
    )


# ---------------------------------------------------------------------------
# Sphere and tangent grading data.

@dataclass(frozen=True, slots=True)
class SphereModule:
    """The free rank-one module of the side-0 or side-1 sphere over a fixed
    component; u is its generator."""

    side: int
    p: int
    q: int

    def __post_init__(self):
        if self.side not in (0, 1):
            raise ValueError("side must be 0 or 1")
        if self.p + self.q < 1:
            raise ValueError("sphere modules need p + q >= 1")

    def generator_grading(self) -> Grading:
        if self.side == 0:
            return Grading(2 * (self.p - 1), 2 * self.q, 0)
        return Grading(2 * (self.q - 1), 2 * self.p, 0)


def sphere_gen_grading(s: SphereModule, n: int) -> Grading:
    """Grading of the plane-n module generator (a power of the invertible
    companion class times u)."""
    if s.side == 0:
        return Grading(2 * (s.p - n - 1), 2 * s.q, n)
    return Grading(2 * (s.q - 1), 2 * (s.p - n), n)


def tangent_rep(p: int, q: int) -> Grading:
    """The tangent class (p-q)w + 2(q-1) + qM of the (p, q) space."""
    if not (is_finite(p) and is_finite(q)) or p + q < 1:
        raise ValueError("tangent data needs finite p, q with p + q >= 1")
    return Grading(2 * (q - 1), 2 * q, p - q)


# ---------------------------------------------------------------------------
# Dictionary to the classical plane-graded generators.

@dataclass(frozen=True, slots=True)
class LewisGenerator:
    """gamma (kind='gamma') or Gamma(k) (kind='Gamma', 1 <= k < p);
    meaningful for q <= p."""

    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("gamma", "Gamma"):
            raise ValueError("kind must be 'gamma' or 'Gamma'")
        if self.kind == "Gamma" and self.k < 1:
            raise ValueError("Gamma(k) requires k >= 1")


def lewis_generator(params: RingParams, gen: LewisGenerator) -> Element:
    """gamma = c_{xw-2} c_w;  Gamma(k) = c_{w-2}^{-(k - kbar)} c_w^k c_xw^kbar
    with kbar = min(k, q)."""
    p, q = params.p, params.q
    if not params.finite or q > p:
        raise ValueError("classical dictionary requires finite q <= p")
    if gen.kind == "gamma":
        vec: Vec = (0, 1, 1, 0)
    else:
        if not 1 <= gen.k < p:
            raise ValueError(f"Gamma({gen.k}) requires 1 <= k < p = {p}")
        kbar = min(gen.k, q)
        vec = (-(gen.k - kbar), 0, gen.k, kbar)
    return normalize([(ONE, vec)], params)


def lewis_table(params: RingParams) -> list[tuple[str, Grading, Element]]:
    """gamma and all Gamma(k), with their gradings."""
    out = [("gamma", Grading(0, 2, 0), lewis_generator(params, LewisGenerator("gamma")))]
    for k in range(1, params.p):
        el = lewis_generator(params, LewisGenerator("Gamma", k))
        kbar = min(k, params.q)
        out.append((f"Gamma({k})", Grading(2 * k, 2 * kbar, 0), el))
    return out
