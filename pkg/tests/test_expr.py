import json
import random

import pytest

from eqproj.expr import (
    ExprSyntaxError,
    element_json,
    element_latex,
    element_text,
    monomial_text,
    parse_expr,
    scalar_text,
)
from eqproj.ring import Monomial, RingParams, basis_slice, normalize
from eqproj.scalar import ONE, Scalar

P12 = RingParams(1, 2)


class TestParse:
    def test_monomial(self):
        raw = parse_expr("cxwm2*cw")
        assert raw == [(ONE, (0, 1, 1, 0))]

    def test_relation_two_sides_agree(self):
        lhs = normalize(parse_expr("e^2*1 + (1-kappa)*cxwm2*cw"), P12)
        rhs = normalize(parse_expr("cwm2*cxw"), P12)
        assert lhs == rhs

    def test_euler_saturation(self):
        assert normalize(parse_expr("cw^2*cxw^3"), RingParams(2, 3)).is_zero()

    def test_negative_exponents_only_on_companions(self):
        assert parse_expr("cxwm2^-2") == [(ONE, (0, -2, 0, 0))]
        with pytest.raises(ExprSyntaxError):
            parse_expr("cw^-1")
        with pytest.raises(ExprSyntaxError):
            parse_expr("(cwm2)^-1")

    def test_scalars_and_signs(self):
        # mixed monomials are 2-torsion, so -3*e*xi = e*xi
        assert normalize(parse_expr("-3*e*xi"), P12) == normalize(
            [(Scalar.term(1, 1), (0, 0, 0, 0))], P12
        )
        assert normalize(parse_expr("kappa^2"), P12) == normalize(
            [(Scalar.kappa_term(2), (0, 0, 0, 0))], P12
        )

    def test_inhomogeneous_input_splits(self):
        from eqproj.ring import normalize_split

        parts = normalize_split(parse_expr("-3*e*xi + kappa^2"), P12)
        assert len(parts) == 2
        gradings = sorted(el.grading.astuple() for el in parts)
        assert gradings == [(-2, 3, 0), (0, 0, 0)]

    def test_error_position(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse_expr("cw + @")
        assert "position 5" in str(err.value)
        with pytest.raises(ExprSyntaxError):
            parse_expr("cw cw")
        with pytest.raises(ExprSyntaxError):
            parse_expr("unknown_atom")


class TestPrint:
    def test_monomial_text(self):
        assert monomial_text(Monomial(0, -2, 1, 3)) == "cxwm2^-2*cw*cxw^3"
        assert monomial_text(Monomial(0, 0, 0, 0)) == "1"

    def test_scalar_text_order(self):
        s = Scalar({(2, 0): 1, (0, 1): 1}) - Scalar.kappa_term()
        # (j, i)-lexicographic: e^2 before xi, kappa last
        assert scalar_text(s) == "e^2+xi-kappa"

    def test_element_text(self):
        el = normalize(parse_expr("cxwm2*cw*cxwm2*cw"), P12)
        assert element_text(el) == "e^2*cxwm2*cw + xi*cw*cxw"
        el = normalize(parse_expr("cwm2*cxw"), P12)
        assert element_text(el) == "e^2 + (1-kappa)*cxwm2*cw"

    def test_roundtrip_on_bases(self):
        for p, q in [(1, 2), (2, 2), (3, 1)]:
            params = RingParams(p, q)
            for n in range(-5, 6):
                for _, el in basis_slice(params, n):
                    assert normalize(parse_expr(element_text(el)), params) == el

    def test_roundtrip_on_products(self):
        from eqproj.ring import mul

        params = RingParams(2, 2)
        pool = [el for n in range(-3, 4) for _, el in basis_slice(params, n)]
        rng = random.Random(9)
        for _ in range(60):
            el = mul(rng.choice(pool), rng.choice(pool), params)
            assert normalize(parse_expr(element_text(el)), params) == el

    def test_latex(self):
        el = normalize(parse_expr("cxwm2^-2*cw*cxw"), RingParams(1, 2))
        assert element_latex(el) == "c_{\\chi\\omega-2}^{-2} c_{\\omega} c_{\\chi\\omega}"
        el = normalize(parse_expr("cwm2*cxw"), P12)
        assert (
            element_latex(el)
            == "e^{2} + (1-\\kappa) c_{\\chi\\omega-2} c_{\\omega}"
        )

    def test_json_schema(self):
        el = normalize(parse_expr("cwm2*cxw"), P12)
        doc = element_json(el)
        assert doc["grading"] == [0, 2, 0]
        assert doc["terms"] == [
            {"coeff": {"poly": [[2, 0, 1]], "kappa": 0}, "mono": [0, 0, 0, 0]},
            {"coeff": {"poly": [[0, 0, 1]], "kappa": -1}, "mono": [0, 1, 1, 0]},
        ]
        json.dumps(doc)  # serializable
