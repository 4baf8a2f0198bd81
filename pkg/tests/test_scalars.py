"""Field arithmetic in Q(t1..tk): normalization, axioms, components."""

import random
from fractions import Fraction

import pytest

from darbouxcert import FieldScalar, ParamPoly, param_components, param_gcd, param_lcm

from helpers import fs, rand_scalar, t_param


def test_rational_add():
    assert fs("1/2") + fs("1/2") == fs(1)


def test_parameter_self_division_is_one():
    t = t_param(0, 1)
    assert (t / t).is_one()


def test_product_of_conjugates():
    # oracle: schoolbook expansion (t+1)(t-1) = t^2 + t - t - 1
    t = t_param(0, 1)
    one = FieldScalar.one(1)
    expected = t * t + t - t - one
    assert (t + one) * (t - one) == expected
    assert expected == FieldScalar(ParamPoly(1, {(2,): 1, (0,): -1}))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        fs(1) / fs(0)
    with pytest.raises(ZeroDivisionError):
        FieldScalar(ParamPoly.constant(0, 1), ParamPoly(0))


def test_gcd_reduction_cancels_common_factor():
    # (t^2 - 1) / (t - 1) == t + 1 after eager normalization
    t = t_param(0, 1)
    one = FieldScalar.one(1)
    value = (t * t - one) / (t - one)
    assert value == t + one


def test_denominator_sign_normalization():
    t = t_param(0, 1)
    value = t / fs(-2, k=1)
    assert value.den.leading()[1] > 0
    assert value == fs(Fraction(-1, 2), k=1) * t


def test_joint_integer_content():
    # 2/4 over k=0 reduces to the plain rational 1/2
    half = FieldScalar(ParamPoly.constant(0, 2), ParamPoly.constant(0, 4))
    assert half.as_fraction() == Fraction(1, 2)
    assert half.num.constant_value() == 1
    assert half.den.constant_value() == 2


def test_param_components_direct_read():
    t = t_param(0, 1)
    one_den = ParamPoly.constant(1, 1)
    comps = param_components(t * fs("1/2", k=1), one_den)
    assert comps == {(1,): Fraction(1, 2)}
    assert param_components(fs(3, k=1), one_den) == {(0,): Fraction(3)}


def test_param_components_with_denominator():
    t = t_param(0, 1)
    value = (t * t + 1) / t
    comps = param_components(value, ParamPoly.parameter(1, 0))
    assert comps == {(2,): Fraction(1), (0,): Fraction(1)}


def test_param_components_wrong_denominator_errors():
    t = t_param(0, 1)
    with pytest.raises(ValueError):
        param_components(1 / t, ParamPoly.constant(1, 1))


def test_param_components_reassembles_exactly():
    rng = random.Random(7)
    for _ in range(25):
        k = rng.randint(1, 2)
        value = rand_scalar(rng, k)
        den = value.den
        comps = param_components(value, den)
        rebuilt = FieldScalar.zero(k)
        for exp, coeff in comps.items():
            rebuilt = rebuilt + FieldScalar(ParamPoly(k, {exp: coeff}))
        assert rebuilt == value * FieldScalar(den)


def test_field_axioms_random():
    rng = random.Random(2024)
    for _ in range(40):
        k = rng.randint(0, 2)
        a = rand_scalar(rng, k)
        b = rand_scalar(rng, k)
        c = rand_scalar(rng, k)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert (a * (FieldScalar.one(k) / a)).is_one()


def test_param_gcd_and_lcm():
    # gcd(t^2 - 1, t^2 - 2t + 1) = t - 1 over Q[t]
    a = ParamPoly(1, {(2,): 1, (0,): -1})
    b = ParamPoly(1, {(2,): 1, (1,): -2, (0,): 1})
    g = param_gcd(a, b)
    assert g == ParamPoly(1, {(1,): 1, (0,): -1})
    lcm_ab = param_lcm(a, b)
    # lcm * gcd = a * b up to the canonical unit
    assert param_lcm(a, b) == param_lcm(b, a)
    assert lcm_ab.degree_in(0) == 3


def test_param_gcd_multivariate():
    # gcd(t1*t2 + t2, t1^2 - 1) = t1 + 1
    a = ParamPoly(2, {(1, 1): 1, (0, 1): 1})
    b = ParamPoly(2, {(2, 0): 1, (0, 0): -1})
    assert param_gcd(a, b) == ParamPoly(2, {(1, 0): 1, (0, 0): 1})


def test_multivariate_reduction_in_scalars():
    # (t1^2*t2 + t2) / (t1^2 + 1) normalizes to t2
    t1 = t_param(0, 2)
    t2 = t_param(1, 2)
    one = FieldScalar.one(2)
    value = (t1 * t1 * t2 + t2) / (t1 * t1 + one)
    assert value == t2


def test_scalar_equality_against_numbers():
    assert fs(3) == 3
    assert fs("3/2") == Fraction(3, 2)
    assert fs(3) != 4
    t = t_param(0, 1)
    assert t != 1
