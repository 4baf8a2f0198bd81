"""Expression grammar: parsing, errors with positions, print round-trips."""

import random
from fractions import Fraction

import pytest

from darbouxcert import (
    FieldScalar,
    LaurentPoly,
    ParseError,
    cofactor,
    format_poly,
    format_scalar,
    gen_optimality_family,
    parse_expression,
)

from helpers import lp, rand_poly, rand_scalar


def parse2(text, parameters=()):
    return parse_expression(text, ("x", "y"), parameters)


def test_parse_four_corner_polynomial():
    poly = parse2("x^3*y^3 + 2*x^2*y^3 + 3*x^3*y^2 + 5")
    assert poly == lp(2, 0, {(3, 3): 1, (2, 3): 2, (3, 2): 3, (0, 0): 5})


def test_parse_zero():
    assert parse2("0").is_zero()


def test_parse_parameter_coefficient():
    poly = parse2("t*y", parameters=("t",))
    assert poly.support() == [(0, 1)]
    assert poly.terms[(0, 1)] == FieldScalar.parameter(1, 0)


def test_parse_rational_literal():
    assert parse2("5/2") == LaurentPoly.constant(2, 0, Fraction(5, 2))


def test_parse_negative_variable_exponent():
    assert parse2("x^-3*y^2") == lp(2, 0, {(-3, 2): 1})


def test_parse_unary_and_parentheses():
    assert parse2("-(x + y)*x") == lp(2, 0, {(2, 0): -1, (1, 1): -1})
    assert parse2("-x^2") == lp(2, 0, {(2, 0): -1})


def test_parse_power_of_sum():
    assert parse2("(x + y)^2") == lp(2, 0, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_parse_division_by_scalar_polynomial():
    poly = parse2("(x + 1)/2")
    assert poly == lp(2, 0, {(1, 0): Fraction(1, 2), (0, 0): Fraction(1, 2)})
    t = FieldScalar.parameter(1, 0)
    poly = parse2("x/(t + 1)", parameters=("t",))
    assert poly.terms[(1, 0)] == FieldScalar.one(1) / (t + 1)


def test_parse_error_unknown_name():
    with pytest.raises(ParseError) as err:
        parse2("x + z")
    assert err.value.position == 5


def test_parse_error_division_by_zero():
    with pytest.raises(ParseError):
        parse2("5/0")
    with pytest.raises(ParseError):
        parse2("x/(y - y)")


def test_parse_error_division_by_variable():
    with pytest.raises(ParseError):
        parse2("1/x")


def test_parse_error_non_integer_exponent():
    with pytest.raises(ParseError):
        parse2("x^y")
    with pytest.raises(ParseError):
        parse2("x^(2)")


def test_parse_error_negative_exponent_on_parameter():
    with pytest.raises(ParseError) as err:
        parse2("t^-1", parameters=("t",))
    assert "parameter" in str(err.value)


def test_parse_error_negative_exponent_on_compound():
    with pytest.raises(ParseError):
        parse2("(x + y)^-1")


def test_parse_error_juxtaposition():
    with pytest.raises(ParseError):
        parse2("2x")


def test_parse_error_unexpected_character():
    with pytest.raises(ParseError) as err:
        parse2("x + $")
    assert err.value.position == 5


def test_parse_error_empty_input():
    with pytest.raises(ParseError):
        parse2("   ")


def test_parse_rejects_overlapping_names():
    with pytest.raises(ValueError):
        parse_expression("x", ("x",), ("x",))


def test_format_scalar_forms():
    t = FieldScalar.parameter(1, 0)
    one = FieldScalar.one(1)
    half = FieldScalar.from_fraction(1, Fraction(1, 2))
    assert format_scalar(FieldScalar.from_fraction(0, Fraction(3, 2))) == "3/2"
    assert format_scalar(-t * half, ("t",)) == "-t/2"
    assert format_scalar((t + one) * half, ("t",)) == "(t + 1)/2"
    assert format_scalar(one / (t + one), ("t",)) == "1/(t + 1)"
    assert format_scalar(FieldScalar.zero(1), ("t",)) == "0"


def test_format_poly_canonical_order():
    poly = lp(2, 0, {(3, 3): 1, (2, 3): 2, (3, 2): 3, (0, 0): 5})
    assert format_poly(poly, ("x", "y")) == "x^3*y^3 + 3*x^3*y^2 + 2*x^2*y^3 + 5"


def test_format_poly_signs_and_units():
    poly = lp(2, 0, {(1, 0): 1, (0, 1): -1})
    assert format_poly(poly, ("x", "y")) == "x - y"
    assert format_poly(lp(2, 0, {(1, 0): -1}), ("x", "y")) == "-x"
    assert format_poly(LaurentPoly.zero(2), ("x", "y")) == "0"


def test_format_poly_parenthesizes_compound_coefficients():
    t = FieldScalar.parameter(1, 0)
    one = FieldScalar.one(1)
    poly = LaurentPoly(2, 1, {(1, 0): t + one, (0, 0): -(t + one)})
    text = format_poly(poly, ("x", "y"), ("t",))
    assert text == "(t + 1)*x - (t + 1)"
    assert parse_expression(text, ("x", "y"), ("t",)) == poly


def test_roundtrip_random_polynomials():
    rng = random.Random(41)
    variables = ("x", "y", "z")
    parameters = ("s", "t")
    for _ in range(60):
        n = rng.randint(1, 3)
        k = rng.randint(0, 2)
        terms = {}
        for _ in range(rng.randint(1, 5)):
            exp = tuple(rng.randint(-3, 4) for _ in range(n))
            terms[exp] = rand_scalar(rng, k)
        poly = LaurentPoly(n, k, terms)
        text = format_poly(poly, variables[:n], parameters[:k])
        assert parse_expression(text, variables[:n], parameters[:k]) == poly


def test_roundtrip_engine_outputs():
    d, candidates = gen_optimality_family([0, 1, 2], 2)
    variables = ("x1", "x2")
    parameters = ("t2",)
    for candidate in candidates:
        pair = cofactor(d, candidate)
        for poly in (pair.f, pair.g):
            text = format_poly(poly, variables, parameters)
            assert parse_expression(text, variables, parameters) == poly


def test_roundtrip_laurent_quotient():
    poly = lp(2, 0, {(-1, 0): 1, (0, 0): 1})
    text = format_poly(poly, ("x", "y"))
    assert text == "1 + x^-1"
    assert parse_expression(text, ("x", "y")) == poly
