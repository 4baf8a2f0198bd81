"""Laurent polynomial arithmetic, exact division, derivatives."""

import random
from fractions import Fraction

import pytest

from darbouxcert import FieldScalar, LaurentPoly, exact_divide

from helpers import lp, rand_poly


def x(i, n=2, k=0):
    return LaurentPoly.variable(n, k, i)


def test_difference_of_squares():
    f = x(0) + x(1)
    g = x(0) - x(1)
    assert f * g == lp(2, 0, {(2, 0): 1, (0, 2): -1})


def test_additive_identity():
    rng = random.Random(1)
    f = rand_poly(rng, 2)
    assert f + LaurentPoly.zero(2) == f


def test_schoolbook_product():
    # (1 + x1)(1 + x2) expands to four terms
    f = LaurentPoly.constant(2, 0, 1) + x(0)
    g = LaurentPoly.constant(2, 0, 1) + x(1)
    expected = lp(2, 0, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})
    assert f * g == expected


def test_exact_divide_factored_identity():
    h = lp(2, 0, {(2, 0): 1, (0, 2): -1})
    f = x(0) - x(1)
    assert exact_divide(h, f) == x(0) + x(1)


def test_exact_divide_by_unit():
    rng = random.Random(2)
    h = rand_poly(rng, 2)
    assert exact_divide(h, LaurentPoly.constant(2, 0, 1)) == h


def test_exact_divide_remainder_case():
    h = lp(2, 0, {(2, 0): 1, (0, 1): 1})  # x1^2 + x2
    f = x(0) - x(1)
    assert exact_divide(h, f) is None
    # independent oracle: f(1,1) = 0 but h(1,1) = 2, so f cannot divide h
    assert f.evaluate([1, 1]).is_zero()
    assert h.evaluate([1, 1]) == 2


def test_exact_divide_laurent_quotient():
    # (1 + x1) / x1 = x1^-1 + 1 in the Laurent ring
    h = LaurentPoly.constant(2, 0, 1) + x(0)
    q = exact_divide(h, x(0))
    assert q == lp(2, 0, {(-1, 0): 1, (0, 0): 1})
    assert q * x(0) == h


def test_exact_divide_zero_divisor_errors():
    with pytest.raises(ZeroDivisionError):
        exact_divide(x(0), LaurentPoly.zero(2))


def test_exact_divide_roundtrip_random():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, exp_lo=-2, exp_hi=3)
        g = rand_poly(rng, n, exp_lo=-2, exp_hi=3)
        assert exact_divide(f * g, f) == g


def test_partial_derivative_power_rule():
    f = lp(2, 0, {(2, 1): 1})  # x1^2 x2
    assert f.partial_derivative(0) == lp(2, 0, {(1, 1): 2})


def test_partial_derivative_kills_missing_variable():
    f = lp(2, 0, {(0, 3): 1})  # x2^3
    assert f.partial_derivative(0).is_zero()


def test_partial_derivative_four_corner_shape():
    f = lp(2, 0, {(3, 3): 1, (2, 3): 1, (3, 2): 1, (0, 0): 1})
    expected = lp(2, 0, {(2, 3): 3, (1, 3): 2, (2, 2): 3})
    assert f.partial_derivative(0) == expected


def test_partial_derivative_laurent_exponent():
    f = lp(1, 0, {(-2,): 1})
    assert f.partial_derivative(0) == lp(1, 0, {(-3,): -2})


def test_partial_derivative_index_errors():
    with pytest.raises(IndexError):
        x(0).partial_derivative(2)


def test_leibniz_rule_random():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, exp_lo=-1, exp_hi=3)
        g = rand_poly(rng, n, exp_lo=-1, exp_hi=3)
        i = rng.randrange(n)
        lhs = (f * g).partial_derivative(i)
        rhs = f * g.partial_derivative(i) + g * f.partial_derivative(i)
        assert lhs == rhs


def test_variable_count_mismatch_errors():
    with pytest.raises(ValueError):
        x(0, n=2) + x(0, n=3)
    with pytest.raises(ValueError):
        x(0, n=2) * x(0, n=3)


def test_pow_and_scale():
    f = x(0) + x(1)
    assert f ** 0 == LaurentPoly.constant(2, 0, 1)
    assert f ** 3 == f * f * f
    assert f.scale(Fraction(1, 2)) + f.scale(Fraction(1, 2)) == f
    assert f.scale(0).is_zero()


def test_parametric_coefficients():
    t = FieldScalar.parameter(1, 0)
    f = LaurentPoly.variable(2, 1, 1).scale(t)
    assert f.terms[(0, 1)] == t
    assert (f * f).terms[(0, 2)] == t * t
