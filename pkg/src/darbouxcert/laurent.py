"""Sparse Laurent polynomials over the session coefficient field.

Terms map integer exponent tuples (negative entries allowed) to nonzero
FieldScalar coefficients.  The zero polynomial has an empty term map.
Polynomial-only contexts (derivations, Darboux candidates) validate
nonnegativity at their own boundary; the arithmetic here is fully Laurent.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import FieldScalar, divide_terms_exact, grlex_key


class LaurentPoly:
    """Laurent polynomial in n variables with k-parameter field coefficients."""

    __slots__ = ("n", "k", "terms")

    def __init__(self, n: int, k: int, terms: dict | None = None):
        clean: dict[tuple[int, ...], FieldScalar] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp!r} has length {len(exp)}, expected {n}")
            if not isinstance(coeff, FieldScalar):
                coeff = FieldScalar.from_fraction(k, coeff)
            elif coeff.k != k:
                raise ValueError(f"coefficient parameter count {coeff.k}, expected {k}")
            if coeff:
                clean[exp] = coeff
        self.n = n
        self.k = k
        self.terms = clean

    @classmethod
    def zero(cls, n: int, k: int = 0) -> "LaurentPoly":
        return cls(n, k)

    @classmethod
    def constant(cls, n: int, k: int, value) -> "LaurentPoly":
        return cls(n, k, {(0,) * n: value})

    @classmethod
    def variable(cls, n: int, k: int, index: int) -> "LaurentPoly":
        return cls.monomial(n, k, tuple(1 if j == index else 0 for j in range(n)))

    @classmethod
    def monomial(cls, n: int, k: int, exponents: tuple[int, ...], coeff=1) -> "LaurentPoly":
        if len(exponents) != n:
            raise ValueError("monomial exponent length mismatch")
        return cls(n, k, {tuple(exponents): coeff})

    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        if self.k != other.k:
            raise ValueError(f"parameter count mismatch: {self.k} vs {other.k}")

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def is_polynomial(self) -> bool:
        return all(all(e >= 0 for e in exp) for exp in self.terms)

    def constant_coefficient(self) -> FieldScalar:
        return self.terms.get((0,) * self.n, FieldScalar.zero(self.k))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], FieldScalar]]:
        """Terms in descending graded-lex order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def total_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no total degree")
        return max(sum(exp) for exp in self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            val = out[exp] + coeff if exp in out else coeff
            if val:
                out[exp] = val
            else:
                out.pop(exp, None)
        return LaurentPoly(self.n, self.k, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], FieldScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                val = out[exp] + prod if exp in out else prod
                if val:
                    out[exp] = val
                else:
                    out.pop(exp, None)
        return LaurentPoly(self.n, self.k, out)

    def __rmul__(self, other) -> "LaurentPoly":
        return self.scale(other)

    def scale(self, factor) -> "LaurentPoly":
        if not isinstance(factor, FieldScalar):
            factor = FieldScalar.from_fraction(self.k, factor)
        if not factor:
            return LaurentPoly.zero(self.n, self.k)
        return LaurentPoly(self.n, self.k, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        result = LaurentPoly.constant(self.n, self.k, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def partial_derivative(self, index: int) -> "LaurentPoly":
        """Term-wise derivative in variable `index` (0-based); Laurent terms allowed."""
        if not 0 <= index < self.n:
            raise IndexError(f"variable index {index} out of range for n={self.n}")
        out = {}
        for exp, coeff in self.terms.items():
            e = exp[index]
            if e == 0:
                continue
            new_exp = exp[:index] + (e - 1,) + exp[index + 1:]
            out[new_exp] = coeff * e
        return LaurentPoly(self.n, self.k, out)

    def evaluate(self, values) -> FieldScalar:
        """Evaluate at a rational point; negative exponents need nonzero entries."""
        vals = [Fraction(v) for v in values]
        if len(vals) != self.n:
            raise ValueError("evaluation point has the wrong length")
        total = FieldScalar.zero(self.k)
        for exp, coeff in self.terms.items():
            factor = Fraction(1)
            for v, e in zip(vals, exp):
                if e:
                    factor *= v ** e
            total = total + coeff * factor
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.n == other.n
            and self.k == other.k
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if self.is_zero():
            return "LaurentPoly(0)"
        bits = []
        for exp, coeff in self.sorted_terms():
            mono = "*".join(
                f"X{j + 1}" + (f"^{e}" if e != 1 else "")
                for j, e in enumerate(exp)
                if e
            )
            bits.append(f"({coeff!r})" + (f"*{mono}" if mono else ""))
        return "LaurentPoly(" + " + ".join(bits) + ")"


def exact_divide(numerator: LaurentPoly, divisor: LaurentPoly) -> LaurentPoly | None:
    """Exact quotient numerator / divisor in the Laurent ring, or None.

    Both arguments are shifted by their componentwise minimum exponents;
    monomials are units, so Laurent divisibility reduces to polynomial
    divisibility of the shifted parts.
    """
    numerator._check(divisor)
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if numerator.is_zero():
        return LaurentPoly.zero(numerator.n, numerator.k)
    min_num = tuple(min(exp[i] for exp in numerator.terms) for i in range(numerator.n))
    min_div = tuple(min(exp[i] for exp in divisor.terms) for i in range(divisor.n))
    shifted_num = {tuple(a - b for a, b in zip(exp, min_num)): c for exp, c in numerator.terms.items()}
    shifted_div = {tuple(a - b for a, b in zip(exp, min_div)): c for exp, c in divisor.terms.items()}
    quotient = divide_terms_exact(shifted_num, shifted_div)
    if quotient is None:
        return None
    offset = tuple(a - b for a, b in zip(min_num, min_div))
    return LaurentPoly(
        numerator.n,
        numerator.k,
        {tuple(a + b for a, b in zip(exp, offset)): c for exp, c in quotient.items()},
    )
