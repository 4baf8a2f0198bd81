"""Cofactor extraction, relation spaces, and first-integral certificates.

A Darboux polynomial f of a derivation D satisfies D(f) = g * f with a
polynomial cofactor g.  Cofactor supports are confined to the nonnegative
lattice points of the derivation's support polytope; that containment is a
theorem, so the engine treats a violation as an internal defect rather than
a data error.  Linear relations among cofactors, over the full coefficient
field or over the plain rationals, yield product-form first integrals; a
relation with integer exponents gives a rational one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .derivation import Derivation
from .laurent import LaurentPoly, exact_divide
from .linalg import rref_kernel_basis
from .polytope import IntPolytope, lattice_points_nonneg
from .scalars import FieldScalar, grlex_key, param_components, param_lcm


class CofactorSupportError(RuntimeError):
    """A cofactor escaped the support-polytope lattice: an internal defect."""


@dataclass(frozen=True, eq=False)
class DarbouxPair:
    """A Darboux polynomial together with its cofactor, D(f) = g * f."""

    f: LaurentPoly
    g: LaurentPoly


@dataclass(frozen=True, eq=False)
class RelationSpace:
    """Basis of the linear relations sum_i v_i * g_i = 0 among cofactors.

    field_tag is "field" for Q(t1..tk) coefficients (FieldScalar entries) and
    "rational" for relations valid identically in the parameters (Fraction
    entries).
    """

    basis: tuple[tuple, ...]
    field_tag: str

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True, eq=False)
class Certificate:
    """Machine-checkable first-integral certificate prod_i f_i ^ exponents_i.

    kind "darboux-fi" carries FieldScalar exponents; "rational-fi" carries a
    primitive integer vector (gcd 1, first nonzero entry positive).
    """

    kind: str
    exponents: tuple
    factors: tuple[LaurentPoly, ...]
    cofactors: tuple[LaurentPoly, ...]


def cofactor(derivation: Derivation, candidate: LaurentPoly) -> DarbouxPair | None:
    """Extract the cofactor of a candidate, or None when it is not Darboux.

    The candidate must be a nonconstant polynomial.  A Laurent-only quotient
    (negative exponents) means the cofactor is not polynomial, which is a
    normal not-Darboux outcome.
    """
    if candidate.n != derivation.n or candidate.k != derivation.k:
        raise ValueError("candidate does not match the derivation's ambient space")
    if candidate.is_zero():
        raise ValueError("the zero polynomial is not a Darboux candidate")
    if not candidate.is_polynomial():
        raise ValueError("Darboux candidates must have nonnegative exponents")
    if candidate.is_constant():
        raise ValueError("constants are excluded as Darboux candidates")
    quotient = exact_divide(derivation.apply(candidate), candidate)
    if quotient is None or not quotient.is_polynomial():
        return None
    lattice = set(derivation.nonneg_lattice_points)
    for exp in quotient.support():
        if exp not in lattice:
            raise CofactorSupportError(
                f"cofactor monomial {exp} lies outside the support-polytope lattice"
            )
    return DarbouxPair(f=candidate, g=quotient)


def _cofactor_matrix(pairs, polytope: IntPolytope):
    """Rows indexed by the polytope's nonnegative lattice points (graded-lex),
    columns by the supplied pairs; entries are cofactor coefficients."""
    if not pairs:
        raise ValueError("relation spaces need at least one Darboux pair")
    first = pairs[0].g
    n, k = first.n, first.k
    lattice = sorted(lattice_points_nonneg(polytope), key=grlex_key)
    index = {point: i for i, point in enumerate(lattice)}
    zero = FieldScalar.zero(k)
    matrix = [[zero] * len(pairs) for _ in lattice]
    for col, pair in enumerate(pairs):
        if pair.g.n != n or pair.g.k != k:
            raise ValueError("pairs disagree on the ambient space")
        for exp, coeff in pair.g.terms.items():
            row = index.get(exp)
            if row is None:
                raise CofactorSupportError(
                    f"cofactor monomial {exp} is outside the relation basis"
                )
            matrix[row][col] = coeff
    return matrix, k


def _check_relations(basis, pairs) -> None:
    n, k = pairs[0].g.n, pairs[0].g.k
    for vector in basis:
        residual = LaurentPoly.zero(n, k)
        for coeff, pair in zip(vector, pairs):
            residual = residual + pair.g.scale(coeff)
        if not residual.is_zero():
            raise CofactorSupportError("relation-space vector fails the defining identity")


def relation_space_field(pairs, polytope: IntPolytope) -> RelationSpace:
    """Kernel of the cofactor matrix over the coefficient field Q(t1..tk)."""
    pairs = list(pairs)
    matrix, k = _cofactor_matrix(pairs, polytope)
    basis = rref_kernel_basis(matrix, len(pairs), FieldScalar.zero(k), FieldScalar.one(k))
    _check_relations(basis, pairs)
    return RelationSpace(basis=tuple(basis), field_tag="field")


def relation_space_rational(pairs, polytope: IntPolytope) -> RelationSpace:
    """Relations with plain rational coefficients, valid identically in the
    parameters.

    Each matrix row is cleared by its common denominator (which leaves the
    kernel unchanged), split into one rational row per parameter monomial,
    and the joint kernel is taken over Q.
    """
    pairs = list(pairs)
    matrix, k = _cofactor_matrix(pairs, polytope)
    rational_rows: list[list[Fraction]] = []
    for row in matrix:
        den = row[0].den
        for entry in row[1:]:
            den = param_lcm(den, entry.den)
        components = [param_components(entry, den) for entry in row]
        exponents = sorted({exp for comp in components for exp in comp}, key=grlex_key)
        for exp in exponents:
            rational_rows.append([comp.get(exp, Fraction(0)) for comp in components])
    basis = rref_kernel_basis(rational_rows, len(pairs), Fraction(0), Fraction(1))
    _check_relations(basis, pairs)
    return RelationSpace(basis=tuple(basis), field_tag="rational")


def darboux_first_integral(pairs, polytope: IntPolytope) -> Certificate | None:
    """First relation over the field, packaged as a product-form certificate."""
    pairs = list(pairs)
    space = relation_space_field(pairs, polytope)
    if not space.basis:
        return None
    return Certificate(
        kind="darboux-fi",
        exponents=space.basis[0],
        factors=tuple(pair.f for pair in pairs),
        cofactors=tuple(pair.g for pair in pairs),
    )


def _primitive_integer_vector(vector) -> tuple[int, ...]:
    scale = lcm(*(x.denominator for x in vector)) if vector else 1
    ints = [int(x * scale) for x in vector]
    content = gcd(*(abs(v) for v in ints))
    ints = [v // content for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def rational_first_integral(pairs, polytope: IntPolytope) -> Certificate | None:
    """Integer-exponent certificate from the rational relation space, if any."""
    pairs = list(pairs)
    space = relation_space_rational(pairs, polytope)
    if not space.basis:
        return None
    return Certificate(
        kind="rational-fi",
        exponents=_primitive_integer_vector(space.basis[0]),
        factors=tuple(pair.f for pair in pairs),
        cofactors=tuple(pair.g for pair in pairs),
    )


def certificate_checks(derivation: Derivation, certificate: Certificate) -> dict:
    """Individual verification verdicts for a certificate.

    factors_darboux: every factor admits a cofactor matching the stored one.
    residual_zero: sum_i exponents_i * g_i vanishes identically.
    quotient_rule_zero (rational-fi only): with P the product over positive
    exponents and Q over negated negative ones, D(P) * Q - P * D(Q) = 0.
    """
    checks = {"factors_darboux": True, "residual_zero": False}
    if certificate.kind == "rational-fi":
        checks["quotient_rule_zero"] = False
    if len(certificate.factors) != len(certificate.cofactors) or not certificate.factors:
        checks["factors_darboux"] = False
        return checks
    recomputed = []
    for factor, stored in zip(certificate.factors, certificate.cofactors):
        try:
            pair = cofactor(derivation, factor)
        except ValueError:
            pair = None
        if pair is None or pair.g != stored:
            checks["factors_darboux"] = False
            return checks
        recomputed.append(pair.g)
    residual = LaurentPoly.zero(derivation.n, derivation.k)
    for exponent, g in zip(certificate.exponents, recomputed):
        residual = residual + g.scale(exponent)
    checks["residual_zero"] = residual.is_zero()
    if certificate.kind == "rational-fi":
        numerator = LaurentPoly.constant(derivation.n, derivation.k, 1)
        denominator = LaurentPoly.constant(derivation.n, derivation.k, 1)
        for exponent, factor in zip(certificate.exponents, certificate.factors):
            if exponent > 0:
                numerator = numerator * factor ** exponent
            elif exponent < 0:
                denominator = denominator * factor ** (-exponent)
        lhs = derivation.apply(numerator) * denominator
        rhs = numerator * derivation.apply(denominator)
        checks["quotient_rule_zero"] = (lhs - rhs).is_zero()
    return checks


def verify_certificate(derivation: Derivation, certificate: Certificate) -> bool:
    """True when every applicable certificate check passes exactly."""
    return all(certificate_checks(derivation, certificate).values())
