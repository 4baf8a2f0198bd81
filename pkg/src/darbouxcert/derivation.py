"""Polynomial derivations, their support polytope, and the sparse bound.

A derivation acts as sum_i A_i * d/dX_i.  Its support polytope is the convex
hull of the union of the translated Newton polytopes N(A_i) - e_i; by the
generic-combination degree law, that hull is exactly the Newton polytope of a
generic combination of the A_i / X_i, so no random coefficients are ever
drawn and every report is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .laurent import LaurentPoly
from .polytope import IntPolytope, convex_hull, lattice_points_nonneg


@dataclass(frozen=True, eq=False)
class Derivation:
    """n-tuple of polynomial coefficients A_i, at least one nonzero."""

    coefficients: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a derivation needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        n = len(self.coefficients)
        k = self.coefficients[0].k
        for i, poly in enumerate(self.coefficients):
            if poly.n != n:
                raise ValueError(f"coefficient {i} has {poly.n} variables, expected {n}")
            if poly.k != k:
                raise ValueError("coefficients disagree on the parameter count")
            if not poly.is_polynomial():
                raise ValueError(f"coefficient {i} has negative exponents")
        if all(poly.is_zero() for poly in self.coefficients):
            raise ValueError("the zero derivation is not allowed")

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def k(self) -> int:
        return self.coefficients[0].k

    def apply(self, poly: LaurentPoly) -> LaurentPoly:
        """sum_i A_i * d(poly)/dX_i, exactly."""
        if poly.n != self.n or poly.k != self.k:
            raise ValueError("polynomial does not match the derivation's ambient space")
        total = LaurentPoly.zero(self.n, self.k)
        for i, coeff in enumerate(self.coefficients):
            if coeff.is_zero():
                continue
            total = total + coeff * poly.partial_derivative(i)
        return total

    @cached_property
    def support_polytope(self) -> IntPolytope:
        """Hull of the union of the supports of the A_i shifted by -e_i."""
        points = []
        for i, coeff in enumerate(self.coefficients):
            for exp in coeff.support():
                points.append(exp[:i] + (exp[i] - 1,) + exp[i + 1:])
        return convex_hull(points, n=self.n)

    @cached_property
    def nonneg_lattice_points(self) -> tuple[tuple[int, ...], ...]:
        return tuple(lattice_points_nonneg(self.support_polytope))


@dataclass(frozen=True)
class BoundsReport:
    """Sparse versus dense integrability thresholds for one derivation.

    b is the number of nonnegative lattice points of the support polytope;
    the sparse thresholds are b+1 and b+n, the dense ones use the classical
    binomial count for the maximal total degree of the coefficients.
    """

    b: int
    sparse_darboux: int
    sparse_jouanolou: int
    dense_degree: int
    dense_darboux: int
    dense_jouanolou: int
    lattice_points: tuple[tuple[int, ...], ...]


def bounds_report(derivation: Derivation) -> BoundsReport:
    points = derivation.nonneg_lattice_points
    b = len(points)
    n = derivation.n
    degree = max(
        coeff.total_degree()
        for coeff in derivation.coefficients
        if not coeff.is_zero()
    )
    dense_count = comb(n + degree - 1, n)
    assert b <= dense_count, "sparse count exceeded the dense count"
    return BoundsReport(
        b=b,
        sparse_darboux=b + 1,
        sparse_jouanolou=b + n,
        dense_degree=degree,
        dense_darboux=dense_count + 1,
        dense_jouanolou=dense_count + n,
        lattice_points=points,
    )
