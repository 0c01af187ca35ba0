"""Exact symbolic calculator for the extended-graded equivariant cohomology
rings of the projective spaces P(C^p + M^q) with involution, over Burnside
or constant-Z coefficients: graded bases, normal-form products, restriction
and push-forward maps, fixed-point restriction, the classical-generator
dictionary, and a finite-window verification harness."""

from .grading import (
    CHI_OMEGA,
    CHI_OMEGA_MINUS_2,
    Grading,
    INF,
    LAMBDA,
    LineId,
    M,
    OMEGA,
    OMEGA_MINUS_2,
    PlaneDecomposition,
    R,
    d_slice,
    e_point,
    f_point,
    g_point,
    in_basis_set,
    line_point,
    may_be_nonzero,
    rel_leq,
    rel_lt,
)
from .scalar import (
    CoefficientMode,
    Scalar,
    UnitTag,
    scalar_grading,
    scalar_mul,
    to_constz,
    unit_mul,
)
from .ring import (
    Element,
    FixedRingElement,
    GradingNotInBasis,
    IllegalDivisibleClass,
    InfiniteDivisor,
    Monomial,
    RingError,
    RingParams,
    basis_monomial,
    basis_slice,
    fixed_ring_normalize,
    mul,
    normalize,
)
from .maps import (
    LewisGenerator,
    SphereModule,
    eta,
    lewis_generator,
    pushforward_chiomega,
    pushforward_composite,
    pushforward_omega,
    restrict,
    sphere_gen_grading,
    tangent_rep,
)
from .expr import parse_expr, print_element

__version__ = "0.1.0"
