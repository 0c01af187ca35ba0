"""Acceptance gate: every criterion at its stated window, all exact.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass/fail line
per criterion.
"""

import random
from math import comb

from eqproj.expr import element_text
from eqproj.grading import d_slice, leq_at, line_func, lt_at, rel_leq
from eqproj.maps import eta, restrict
from eqproj.ring import (
    RingParams,
    basis_slice,
    element_from_vec,
    mul,
    normalize,
    normalize_randomized,
)
from eqproj.scalar import CoefficientMode, ONE, ONE_MINUS_KAPPA, Scalar
from eqproj.verify import (
    _random_legal_vec,
    check_lewis,
    check_relations_table,
    check_splitting_vanishing,
)


def _report(num: int, desc: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {num}: {status} - {desc}")
    assert not failures, f"criterion {num}: {failures[:5]}"


# The six per-plane diagrams for (p, q) = (1, 2), planes 2 .. -3, frozen as
# (grading triple, exponent vector) in line order.
EXAMPLE_DIAGRAMS = {
    2: [((-4, 0, 2), (2, 0, 0, 0)), ((0, -2, 2), (0, -1, 1, 0)), ((2, -2, 2), (0, -2, 1, 1))],
    1: [((-2, 0, 1), (1, 0, 0, 0)), ((0, 0, 1), (0, 0, 1, 0)), ((2, 0, 1), (0, -1, 1, 1))],
    0: [((0, 0, 0), (0, 0, 0, 0)), ((0, 2, 0), (0, 1, 1, 0)), ((2, 2, 0), (0, 0, 1, 1))],
    -1: [((0, 2, -1), (0, 1, 0, 0)), ((2, 2, -1), (0, 0, 0, 1)), ((2, 4, -1), (0, 1, 1, 1))],
    -2: [((0, 4, -2), (0, 2, 0, 0)), ((2, 4, -2), (0, 1, 0, 1)), ((4, 4, -2), (0, 0, 0, 2))],
    -3: [((0, 6, -3), (0, 3, 0, 0)), ((2, 6, -3), (0, 2, 0, 1)), ((6, 4, -3), (-1, 0, 0, 2))],
}


def test_criterion_1_example_reproduction():
    failures = []
    params = RingParams(1, 2)
    for n, expected in EXAMPLE_DIAGRAMS.items():
        got_slice = [g.astuple() for g in d_slice(1, 2, n)]
        want_slice = [g for g, _ in expected]
        if got_slice != want_slice:
            failures.append(f"plane {n}: slice {got_slice} != {want_slice}")
        got_basis = [tuple(next(iter(el.items()))[0]) for _, el in basis_slice(params, n)]
        want_basis = [v for _, v in expected]
        if got_basis != want_basis:
            failures.append(f"plane {n}: basis {got_basis} != {want_basis}")
    _report(1, "six example diagrams at (1,2), planes 2..-3, exact", failures)


def test_criterion_2_basis_freeness():
    failures = []
    for p in range(0, 7):
        for q in range(0, 7 - p):
            if p + q == 0:
                continue
            params = RingParams(p, q)
            for n in range(-10, 11):
                basis = basis_slice(params, n)
                monos = [next(iter(el.items()))[0] for _, el in basis]
                gradings = [m.grading() for m in monos]
                if not (
                    len(basis) == p + q
                    and len(set(gradings)) == p + q
                    and gradings == list(d_slice(p, q, n))
                ):
                    failures.append(f"({p},{q}) plane {n}")
    _report(2, "free-basis bookkeeping for p+q <= 6, planes [-10,10], exact", failures)


def test_criterion_3_ring_identities():
    failures = []
    for p in range(0, 5):
        for q in range(0, 5):
            if p + q == 0:
                continue
            params = RingParams(p, q)
            # relation (1)
            if not normalize([(ONE, (0, 0, p, q))], params).is_zero():
                failures.append(f"({p},{q}): Euler saturation nonzero")
            # relation (2)
            rel2 = normalize(
                [(ONE, (1, 0, 0, 1)), (-ONE_MINUS_KAPPA, (0, 1, 1, 0))], params
            )
            if rel2 != normalize([(Scalar.term(2, 0), (0, 0, 0, 0))], params):
                failures.append(f"({p},{q}): tensor relation broken")
            # relation (3)
            rel3 = mul(
                element_from_vec((0, 1, 0, 0), params),
                element_from_vec((1, 0, 0, 0), params),
                params,
            )
            if rel3 != normalize([(Scalar.term(0, 1), (0, 0, 0, 0))], params):
                failures.append(f"({p},{q}): companion product is not xi")
            # the full relation table, k, l <= 4, plus closed form vs iteration
            rep = check_relations_table(p, q)
            if not rep.passed:
                failures.append(f"({p},{q}): {rep.failures[0]}")
    _report(3, "relations (1)-(3), full relation table k,l <= 4, closed form vs iteration, p,q <= 4", failures)


def test_criterion_4_lewis_comparison():
    failures = []
    for p, q in [(2, 1), (3, 2), (4, 2)]:
        rep = check_lewis(p, q)
        if not rep.passed:
            failures.append(f"({p},{q}): {rep.failures[0]}")
    _report(4, "classical-generator relations at (2,1), (3,2), (4,2), exact", failures)


def test_criterion_5_maps():
    failures = []
    # the fixed-point restriction table on the four generators
    table = {
        (0, 0, 1, 0): ("cw", "e^2*cxwm2^-1 + xi*cxwm2^-2*cxw"),
        (0, 0, 0, 1): ("e^2*cwm2^-1 + xi*cwm2^-2*cw", "cxw"),
        (1, 0, 0, 0): ("cwm2", "xi*cxwm2^-1"),
        (0, 1, 0, 0): ("xi*cwm2^-1", "cxwm2"),
    }
    params = RingParams(2, 2)
    for vec, (want0, want1) in table.items():
        side0, side1 = eta(params, element_from_vec(vec, params))
        if element_text(side0.element) != want0 or element_text(side1.element) != want1:
            failures.append(f"eta table at {vec}")
    for p, q in [(1, 2), (2, 2), (3, 1)]:
        pr = RingParams(p, q)
        side0, _ = eta(pr, element_from_vec((0, 0, p, 0), pr))
        if not side0.is_zero():
            failures.append(f"eta(cw^{p}) first component nonzero at ({p},{q})")

    # restriction binomial formula for parameter drops up to 3
    for q in (2, 3):
        for p in (1, 2):
            for pp in range(p + 1, p + 4):
                frm, to = RingParams(pp, q), RingParams(p, q)
                d = pp - p
                for k in (1, 2, 3):
                    for n in range(0, q):
                        lhs = restrict(frm, to, element_from_vec((0, -k, pp, n), frm))
                        raw = [
                            (
                                Scalar.term(2 * (d - l), l, comb(d, l)),
                                (0, -(k + d + l), p, n + l),
                            )
                            for l in range(d + 1)
                            if n + l < q
                        ]
                        if lhs != normalize(raw, to):
                            failures.append(f"restriction binomial {pp}->{p}, k={k}, n={n}")
    _report(5, "fixed-point restriction table and restriction binomial, drops <= 3, exact", failures)


def test_criterion_6_degree_forced_splitting():
    failures = []
    for p in range(1, 6):
        for q in range(1, 6):
            rep = check_splitting_vanishing(p, q, range(-12, 13))
            if not rep.passed:
                failures.append(f"({p},{q}): {rep.failures[0]}")
    _report(6, "degree-forced vanishing of connecting maps, p,q <= 5, window [-12,12]", failures)


def test_criterion_7_boundedness():
    failures = []
    window = range(-20, 21)
    for p in range(0, 9):
        for q in range(0, 9 - p):
            if p + q == 0:
                continue
            last = line_func(p, q, p + q - 1)
            for k in range(p + q - 1):
                if not rel_leq(line_func(p, q, k), last, window):
                    failures.append(f"l_{k} <= l_last fails at ({p},{q})")
            l0 = line_func(p, q, 0)
            for k in range(1, p + q):
                lk = line_func(p, q, k)
                for n in window:
                    if k == 1 and n == 0:
                        # the single stated exception: strictness fails here
                        # exactly when both indices are positive
                        if lt_at(l0, lk, n) != (p == 0 or q == 0):
                            failures.append(f"exception misfires at ({p},{q})")
                        if not leq_at(l0, lk, n):
                            failures.append(f"l_0 <= l_1 fails at ({p},{q}) plane 0")
                    elif not lt_at(l0, lk, n):
                        failures.append(f"l_0 < l_{k} fails at ({p},{q}) plane {n}")
    _report(7, "line boundedness and strict domination, p+q <= 8, window [-20,20]", failures)


def test_criterion_8_robustness():
    failures = []
    trials = 10_000
    for p in range(0, 4):
        for q in range(0, 4):
            if p + q == 0:
                continue
            params = RingParams(p, q)
            rng = random.Random(1000 * p + q)
            pool = [
                next(iter(el.items()))[0]
                for n in range(-3, 4)
                for _, el in basis_slice(params, n)
            ]
            for t in range(trials):
                v1 = _random_legal_vec(rng, p, q)
                v2 = _random_legal_vec(rng, p, q)
                raw = [(ONE, tuple(a + b for a, b in zip(v1, v2)))]
                if normalize(raw, params) != normalize_randomized(raw, params, rng):
                    failures.append(f"confluence at ({p},{q}): {v1} * {v2}")
                    break
                x = element_from_vec(tuple(rng.choice(pool)), params)
                y = element_from_vec(tuple(rng.choice(pool)), params)
                z = element_from_vec(tuple(rng.choice(pool)), params)
                xy = mul(x, y, params)
                if xy != mul(y, x, params):
                    failures.append(f"commutativity at ({p},{q})")
                    break
                if mul(xy, z, params) != mul(x, mul(y, z, params), params):
                    failures.append(f"associativity at ({p},{q})")
                    break
            # the constant-Z relation, exactly
            zparams = RingParams(max(p, 1), max(q, 1), CoefficientMode.CONSTANT_Z)
            got = normalize(
                [(ONE, (1, 0, 0, 1)), (-ONE, (0, 1, 1, 0))], zparams
            )
            if got != normalize([(Scalar.term(2, 0), (0, 0, 0, 0))], zparams):
                failures.append(f"constant-Z relation at ({p},{q})")
    _report(8, "confluence + associativity/commutativity, 10^4 seeded trials per (p,q) <= (3,3); constant-Z relation", failures)
