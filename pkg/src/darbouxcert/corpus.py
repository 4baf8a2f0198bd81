"""Deterministic generators for the built-in example families.

Three families are provided: seeded dense systems (every monomial up to the
requested degree present with a positive coefficient), the two-variable
product-corner family whose support polygon stays four points while the
total degree grows, and the decoupled family p(X1) d/dX1 + t2 X2 d/dX2 + ...
whose linear factors and coordinate variables are ready-made Darboux
candidates.  Positive coefficients keep every Newton-polytope vertex alive,
so the generated polytopes match the generic ones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .derivation import Derivation
from .laurent import LaurentPoly
from .scalars import FieldScalar


@dataclass(frozen=True)
class CorpusInstance:
    """A generated system together with its session naming."""

    variables: tuple[str, ...]
    parameters: tuple[str, ...]
    derivation: Derivation
    candidates: tuple[LaurentPoly, ...] | None = None


@dataclass(frozen=True)
class FamilySpec:
    """CLI-facing description of one corpus instance."""

    family: str
    n: int = 2
    degree: int | None = None
    seed: int = 0
    e: int | None = None
    roots: tuple[Fraction, ...] | None = None

    def generate(self) -> CorpusInstance:
        if self.family == "dense":
            if self.degree is None:
                raise ValueError("the dense family needs a degree")
            derivation = gen_dense(self.n, self.degree, self.seed)
            return CorpusInstance(_variable_names(self.n), (), derivation)
        if self.family == "figure-e":
            if self.e is None:
                raise ValueError("the figure-e family needs the corner size e")
            if self.n != 2:
                raise ValueError("the figure-e family is two-dimensional")
            return CorpusInstance(_variable_names(2), (), gen_figure_family(self.e))
        if self.family == "optimality":
            if not self.roots:
                raise ValueError("the optimality family needs a root list")
            derivation, candidates = gen_optimality_family(self.roots, self.n)
            return CorpusInstance(
                _variable_names(self.n),
                tuple(f"t{i}" for i in range(2, self.n + 1)),
                derivation,
                candidates,
            )
        raise ValueError(f"unknown family {self.family!r}")


def _variable_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def _monomials_up_to(n: int, degree: int) -> list[tuple[int, ...]]:
    exps = [e for e in product(range(degree + 1), repeat=n) if sum(e) <= degree]
    return sorted(exps, key=lambda e: (sum(e), e))


def gen_dense(n: int, degree: int, seed: int) -> Derivation:
    """Every monomial of total degree <= degree, positive seeded coefficients."""
    if n < 1 or degree < 1:
        raise ValueError("dense systems need n >= 1 and degree >= 1")
    rng = random.Random(seed)
    monomials = _monomials_up_to(n, degree)
    coefficients = []
    for _ in range(n):
        terms = {
            exp: Fraction(rng.randint(1, 9), rng.randint(1, 9))
            for exp in monomials
        }
        coefficients.append(LaurentPoly(n, 0, terms))
    return Derivation(tuple(coefficients))


def gen_figure_family(e: int) -> Derivation:
    """Two-variable system with support {(e,e), (e-1,e), (e,e-1), (0,0)}."""
    if e < 1:
        raise ValueError("the corner size e must be at least 1")
    terms = {
        (e, e): Fraction(1),
        (e - 1, e): Fraction(2),
        (e, e - 1): Fraction(3),
        (0, 0): Fraction(5),
    }
    poly = LaurentPoly(2, 0, terms)
    return Derivation((poly, poly))


def gen_optimality_family(roots, n: int) -> tuple[Derivation, tuple[LaurentPoly, ...]]:
    """p(X1) d/dX1 plus t_i X_i d/dX_i for i >= 2, with its Darboux candidates.

    p is the product of (X1 - root) over the given distinct rational roots;
    the transcendental parameters t2..tn model eigenvalues that admit no
    integer relation with any rational number.  Candidates are the linear
    factors of p and the coordinate variables X2..Xn.
    """
    roots = tuple(Fraction(r) for r in roots)
    if len(set(roots)) != len(roots):
        raise ValueError("roots must be distinct")
    if not roots:
        raise ValueError("at least one root is required")
    if n < 2:
        raise ValueError("the optimality family needs n >= 2")
    k = n - 1
    factors = []
    p = LaurentPoly.constant(n, k, 1)
    for root in roots:
        factor = LaurentPoly.variable(n, k, 0) - LaurentPoly.constant(n, k, root)
        factors.append(factor)
        p = p * factor
    coefficients = [p]
    for i in range(1, n):
        coefficients.append(
            LaurentPoly.variable(n, k, i).scale(FieldScalar.parameter(k, i - 1))
        )
    candidates = tuple(factors) + tuple(LaurentPoly.variable(n, k, i) for i in range(1, n))
    return Derivation(tuple(coefficients)), candidates
