"""Exact arithmetic for the coefficient field Q(t1, ..., tk).

A session fixes the number k of transcendental parameters.  ParamPoly is a
sparse polynomial in those parameters with Fraction coefficients; FieldScalar
is a reduced quotient of two ParamPoly values and is the coefficient domain
for every polynomial in the package.  k = 0 collapses to ordinary rational
arithmetic.

Normalization is eager and canonical: numerator and denominator are coprime
polynomials, their coefficients are integers with joint content 1, and the
denominator's graded-lex leading coefficient is positive.  Structural
equality is therefore value equality, and printed output is byte-stable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

# The ground field of plain rational numbers; Fraction already maintains the
# reduced positive-denominator form we need.
Rational = Fraction


def grlex_key(exponents: tuple[int, ...]) -> tuple:
    """Sort key realizing the graded-lexicographic term order."""
    return (sum(exponents), exponents)


def divide_terms_exact(numerator: dict, divisor: dict):
    """Exact single-divisor division of canonical term maps.

    Exponent keys must be componentwise-nonnegative tuples and coefficient
    values any field type supporting +, -, *, / and truthiness.  Returns the
    quotient term map, or None as soon as a remainder is unavoidable (for a
    single divisor the first non-divisible leading term settles it).
    """
    if not numerator:
        return {}
    lead_exp = max(divisor, key=grlex_key)
    lead_coeff = divisor[lead_exp]
    current = dict(numerator)
    quotient = {}
    while current:
        top = max(current, key=grlex_key)
        shift = tuple(a - b for a, b in zip(top, lead_exp))
        if any(s < 0 for s in shift):
            return None
        q = current[top] / lead_coeff
        quotient[shift] = q
        for exp, coeff in divisor.items():
            target = tuple(a + b for a, b in zip(shift, exp))
            value = current.get(target)
            value = -q * coeff if value is None else value - q * coeff
            if value:
                current[target] = value
            else:
                current.pop(target, None)
    return quotient


class ParamPoly:
    """Sparse polynomial in the parameters: exponent tuple -> Fraction.

    Instances are immutable by convention; no zero coefficients are stored,
    and the zero polynomial has an empty term map.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k:
                raise ValueError(f"exponent {exp!r} has length {len(exp)}, expected {k}")
            if any(e < 0 for e in exp):
                raise ValueError("parameter exponents must be nonnegative")
            coeff = Fraction(coeff)
            if coeff:
                clean[exp] = coeff
        self.k = k
        self.terms = clean

    @classmethod
    def constant(cls, k: int, value) -> "ParamPoly":
        return cls(k, {(0,) * k: Fraction(value)})

    @classmethod
    def parameter(cls, k: int, index: int) -> "ParamPoly":
        if not 0 <= index < k:
            raise IndexError(f"parameter index {index} out of range for k={k}")
        exp = [0] * k
        exp[index] = 1
        return cls(k, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[(0,) * self.k]

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Graded-lex leading (exponent, coefficient); undefined for zero."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def degree_in(self, index: int) -> int:
        return max((exp[index] for exp in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lex order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def _check(self, other: "ParamPoly") -> None:
        if self.k != other.k:
            raise ValueError(f"parameter count mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        self._check(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            val = out.get(exp, Fraction(0)) + coeff
            if val:
                out[exp] = val
            else:
                out.pop(exp, None)
        return ParamPoly(self.k, out)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                val = out.get(exp, Fraction(0)) + c1 * c2
                if val:
                    out[exp] = val
                else:
                    out.pop(exp, None)
        return ParamPoly(self.k, out)

    def scaled(self, factor) -> "ParamPoly":
        factor = Fraction(factor)
        if not factor:
            return ParamPoly(self.k)
        return ParamPoly(self.k, {e: c * factor for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ParamPoly)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if self.is_zero():
            return "ParamPoly(0)"
        bits = []
        for exp, coeff in self.sorted_terms():
            mono = "*".join(
                f"t{j + 1}" + (f"^{e}" if e != 1 else "")
                for j, e in enumerate(exp)
                if e
            )
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return "ParamPoly(" + " + ".join(bits) + ")"


def param_divexact(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Exact polynomial quotient a / b; raises if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quotient = divide_terms_exact(a.terms, b.terms)
    if quotient is None:
        raise ArithmeticError("polynomial division is not exact")
    return ParamPoly(a.k, quotient)


def _primitive_canonical(p: ParamPoly) -> ParamPoly:
    """Canonical associate: integer coefficients, content 1, positive leading."""
    if p.is_zero():
        return p
    scale_den = lcm(*(c.denominator for c in p.terms.values()))
    content = gcd(*(abs(c.numerator * (scale_den // c.denominator)) for c in p.terms.values()))
    q = p.scaled(Fraction(scale_den, content))
    if q.leading()[1] < 0:
        q = -q
    return q


def _v_lead_coeff(p: ParamPoly, v: int) -> ParamPoly:
    """Leading coefficient of p viewed as univariate in parameter v."""
    d = p.degree_in(v)
    out = {}
    for exp, coeff in p.terms.items():
        if exp[v] == d:
            out[exp[:v] + (0,) + exp[v + 1:]] = coeff
    return ParamPoly(p.k, out)


def _content_and_primitive(p: ParamPoly, v: int) -> tuple[ParamPoly, ParamPoly]:
    """Split p = content * primitive with respect to parameter v."""
    groups: dict[int, dict] = {}
    for exp, coeff in p.terms.items():
        groups.setdefault(exp[v], {})[exp[:v] + (0,) + exp[v + 1:]] = coeff
    content = ParamPoly(p.k)
    one = ParamPoly.constant(p.k, 1)
    for e in sorted(groups):
        content = param_gcd(content, ParamPoly(p.k, groups[e]))
        if content == one:
            break
    return content, param_divexact(p, content)


def _pseudo_remainder(f: ParamPoly, g: ParamPoly, v: int) -> ParamPoly:
    """Pseudo-remainder of f by g in the parameter v (g nonzero)."""
    d_g = g.degree_in(v)
    lc_g = _v_lead_coeff(g, v)
    r = f
    while not r.is_zero() and r.degree_in(v) >= d_g:
        d_r = r.degree_in(v)
        exp = [0] * f.k
        exp[v] = d_r - d_g
        shift = ParamPoly(f.k, {tuple(exp): Fraction(1)})
        r = lc_g * r - _v_lead_coeff(r, v) * shift * g
    return r


def param_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Polynomial gcd over Q[t1..tk], returned in canonical primitive form.

    Recursive content/primitive-part reduction with a primitive pseudo-
    remainder sequence in the highest parameter that actually occurs.
    """
    if a.is_zero():
        return _primitive_canonical(b)
    if b.is_zero():
        return _primitive_canonical(a)
    if a.is_constant() or b.is_constant():
        return ParamPoly.constant(a.k, 1)
    v = max(j for j in range(a.k) if a.degree_in(j) > 0 or b.degree_in(j) > 0)
    cont_a, prim_a = _content_and_primitive(a, v)
    cont_b, prim_b = _content_and_primitive(b, v)
    c = param_gcd(cont_a, cont_b)
    f, g = prim_a, prim_b
    if f.degree_in(v) < g.degree_in(v):
        f, g = g, f
    while not g.is_zero():
        r = _pseudo_remainder(f, g, v)
        f = g
        g = ParamPoly(a.k) if r.is_zero() else _content_and_primitive(r, v)[1]
    return _primitive_canonical(c * f)


def param_lcm(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    if a.is_zero() or b.is_zero():
        return ParamPoly(a.k)
    return _primitive_canonical(param_divexact(a * b, param_gcd(a, b)))


class FieldScalar:
    """Element of Q(t1, ..., tk), stored as a canonical reduced quotient."""

    __slots__ = ("k", "num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly | None = None):
        if den is None:
            den = ParamPoly.constant(num.k, 1)
        if num.k != den.k:
            raise ValueError("parameter count mismatch between numerator and denominator")
        if den.is_zero():
            raise ZeroDivisionError("scalar with zero denominator")
        if num.is_zero():
            num = ParamPoly(num.k)
            den = ParamPoly.constant(num.k, 1)
        else:
            g = param_gcd(num, den)
            if not (g.is_constant() and g.constant_value() == 1):
                num = param_divexact(num, g)
                den = param_divexact(den, g)
            coeffs = list(num.terms.values()) + list(den.terms.values())
            scale_den = lcm(*(c.denominator for c in coeffs))
            content = gcd(*(abs(c.numerator * (scale_den // c.denominator)) for c in coeffs))
            factor = Fraction(scale_den, content)
            num = num.scaled(factor)
            den = den.scaled(factor)
            if den.leading()[1] < 0:
                num = -num
                den = -den
        self.k = num.k
        self.num = num
        self.den = den

    @classmethod
    def from_fraction(cls, k: int, value) -> "FieldScalar":
        return cls(ParamPoly.constant(k, value))

    @classmethod
    def parameter(cls, k: int, index: int) -> "FieldScalar":
        return cls(ParamPoly.parameter(k, index))

    @classmethod
    def zero(cls, k: int) -> "FieldScalar":
        return cls(ParamPoly(k))

    @classmethod
    def one(cls, k: int) -> "FieldScalar":
        return cls(ParamPoly.constant(k, 1))

    def _coerce(self, other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            if other.k != self.k:
                raise ValueError(f"parameter count mismatch: {self.k} vs {other.k}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldScalar.from_fraction(self.k, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_rational(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not a plain rational number")
        return self.num.constant_value() / self.den.constant_value()

    def is_negative_leading(self) -> bool:
        """True when the graded-lex leading numerator coefficient is negative."""
        return bool(self.num.terms) and self.num.leading()[1] < 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other) -> "FieldScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return FieldScalar(self.num + other.num, self.den)
        return FieldScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "FieldScalar":
        out = object.__new__(FieldScalar)
        out.k = self.k
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other) -> "FieldScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "FieldScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "FieldScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FieldScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        return FieldScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "FieldScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldScalar.from_fraction(self.k, other)
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return self.k == other.k and self.num == other.num and self.den == other.den

    def __repr__(self) -> str:
        if self.den == ParamPoly.constant(self.k, 1):
            return f"FieldScalar({self.num!r})"
        return f"FieldScalar({self.num!r} / {self.den!r})"


def param_components(value: FieldScalar, common_den: ParamPoly) -> dict[tuple[int, ...], Fraction]:
    """Coefficients of value * common_den by parameter monomial.

    common_den must clear the denominator of value, i.e. the product must be
    a polynomial (a scalar with constant denominator).  Reassembling the
    returned map reproduces value * common_den exactly.
    """
    product = value * FieldScalar(common_den)
    if not product.den.is_constant():
        raise ValueError("common denominator does not clear the scalar's denominator")
    scale = product.den.constant_value()
    return {exp: coeff / scale for exp, coeff in product.num.terms.items()}
