"""Exact lattice-polytope geometry over the integers and rationals.

Polytopes are stored by their irredundant vertex set.  Membership is decided
by exact rational linear feasibility (a small phase-1 simplex with Bland's
rule), never by floating point.  Facet/halfspace extraction is provided for
dimension 2 only, by walking the counterclockwise vertex ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .laurent import LaurentPoly


@dataclass(frozen=True)
class IntPolytope:
    """Convex hull of lattice points; vertices are lex-sorted and irredundant."""

    n: int
    vertices: tuple[tuple[int, ...], ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices


@dataclass(frozen=True)
class Halfspace:
    """Closed halfspace normal . m <= offset with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: int


def _feasible_nonneg_combination(columns, rhs) -> bool:
    """Exact phase-1 simplex: does `columns @ x = rhs` admit x >= 0?

    Bland's rule on both the entering and leaving choices guarantees
    termination; all arithmetic is Fraction-exact.
    """
    n_rows = len(rhs)
    n_cols = len(columns)
    table = [
        [Fraction(columns[j][i]) for j in range(n_cols)]
        + [Fraction(1) if r == i else Fraction(0) for r in range(n_rows)]
        + [Fraction(rhs[i])]
        for i in range(n_rows)
    ]
    for row in table:
        if row[-1] < 0:
            for j in range(len(row)):
                row[j] = -row[j]
    width = n_cols + n_rows
    basis = list(range(n_cols, width))
    # Reduced costs for minimizing the artificial-variable sum.
    cost = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        cost[j] = -sum(table[i][j] for i in range(n_rows))
    for j in basis:
        cost[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            return cost[width] == 0
        leave = None
        best = None
        for i in range(n_rows):
            coeff = table[i][enter]
            if coeff > 0:
                ratio = table[i][-1] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("phase-1 simplex became unbounded")
        pivot = table[leave][enter]
        table[leave] = [x / pivot for x in table[leave]]
        for i in range(n_rows):
            if i != leave and table[i][enter]:
                factor = table[i][enter]
                table[i] = [a - factor * b for a, b in zip(table[i], table[leave])]
        if cost[enter]:
            factor = cost[enter]
            cost = [a - factor * b for a, b in zip(cost, table[leave] )]
        basis[leave] = enter


def _in_convex_hull(points, target) -> bool:
    """Exact test: is target a convex combination of the given points?"""
    if not points:
        return False
    n = len(target)
    columns = [tuple(p) + (1,) for p in points]
    rhs = tuple(target) + (1,)
    return _feasible_nonneg_combination(columns, rhs)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _monotone_chain(points) -> list[tuple[int, int]]:
    """CCW vertex ring of a 2D point set, starting at the lex-min vertex.

    Strict turns only, so collinear interior points are dropped and the
    result is the irredundant vertex ring.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _hull_vertices_nd(points) -> list[tuple[int, ...]]:
    """Irredundant vertex set in general dimension via exact LP filtering.

    Unique maximizers over a fixed direction family are accepted outright;
    each remaining point is tested against the hull of the others.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    n = len(pts[0])
    sure: set[tuple[int, ...]] = set()
    for direction in product((-1, 0, 1), repeat=n):
        if not any(direction):
            continue
        best = None
        best_points = []
        for p in pts:
            value = sum(d * x for d, x in zip(direction, p))
            if best is None or value > best:
                best = value
                best_points = [p]
            elif value == best:
                best_points.append(p)
        if len(best_points) == 1:
            sure.add(best_points[0])
    sure_list = sorted(sure)
    vertices = []
    for p in pts:
        if p in sure:
            vertices.append(p)
            continue
        if sure_list and _in_convex_hull(sure_list, p):
            continue
        others = [q for q in pts if q != p]
        if not _in_convex_hull(others, p):
            vertices.append(p)
    return sorted(vertices)


def convex_hull(points, n: int | None = None) -> IntPolytope:
    """Hull of integer points; vertices come back irredundant and lex-sorted."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        if n is None:
            raise ValueError("empty point list needs an explicit dimension")
        return IntPolytope(n, ())
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points of mixed dimension")
    if n is not None and n != dim:
        raise ValueError(f"points have dimension {dim}, expected {n}")
    if dim == 1:
        values = [p[0] for p in pts]
        vertices = sorted({(min(values),), (max(values),)})
    elif dim == 2:
        vertices = sorted(_monotone_chain(pts))
    else:
        vertices = _hull_vertices_nd(pts)
    return IntPolytope(dim, tuple(vertices))


def newton_polytope(poly: LaurentPoly) -> IntPolytope:
    """Hull of the exponent vectors of the nonzero terms."""
    return convex_hull(poly.support(), n=poly.n)


def contains_point(polytope: IntPolytope, point) -> bool:
    """Exact membership test; rational coordinates are accepted."""
    target = tuple(Fraction(x) for x in point)
    if len(target) != polytope.n:
        raise ValueError(f"point has dimension {len(target)}, expected {polytope.n}")
    if polytope.is_empty:
        return False
    if len(polytope.vertices) == 1:
        return target == tuple(Fraction(x) for x in polytope.vertices[0])
    return _in_convex_hull(polytope.vertices, target)


def deg_nu(polytope: IntPolytope, direction) -> int:
    """Maximum of direction . m over the polytope (attained at a vertex)."""
    if polytope.is_empty:
        raise ValueError("degree is undefined for the empty polytope")
    direction = tuple(int(d) for d in direction)
    if len(direction) != polytope.n:
        raise ValueError("direction has the wrong dimension")
    return max(sum(d * x for d, x in zip(direction, v)) for v in polytope.vertices)


def minkowski_sum(p: IntPolytope, q: IntPolytope) -> IntPolytope:
    if p.n != q.n:
        raise ValueError("Minkowski sum of polytopes of different dimension")
    if p.is_empty or q.is_empty:
        return IntPolytope(p.n, ())
    sums = [tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices]
    return convex_hull(sums, n=p.n)


def translate(polytope: IntPolytope, vector) -> IntPolytope:
    vector = tuple(int(x) for x in vector)
    if len(vector) != polytope.n:
        raise ValueError("translation vector has the wrong dimension")
    moved = tuple(sorted(tuple(a + b for a, b in zip(v, vector)) for v in polytope.vertices))
    return IntPolytope(polytope.n, moved)


def lattice_points_nonneg(polytope: IntPolytope) -> list[tuple[int, ...]]:
    """All nonnegative integer points of the polytope, in lexicographic order.

    Enumeration filters the vertex bounding box clipped to the nonnegative
    orthant through the exact membership test.
    """
    if polytope.is_empty:
        return []
    lows = []
    highs = []
    for i in range(polytope.n):
        coords = [v[i] for v in polytope.vertices]
        lows.append(max(0, min(coords)))
        highs.append(max(coords))
        if highs[i] < lows[i]:
            return []
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    return [pt for pt in product(*ranges) if contains_point(polytope, pt)]


def ccw_vertex_ring(polytope: IntPolytope) -> list[tuple[int, int]]:
    """2D vertex ring, counterclockwise from the lexicographic minimum."""
    if polytope.n != 2:
        raise ValueError("vertex rings are defined for dimension 2 only")
    if polytope.is_empty:
        raise ValueError("empty polytope has no vertex ring")
    return _monotone_chain(polytope.vertices)


def _primitive(vector: tuple[int, ...]) -> tuple[int, ...]:
    g = gcd(*(abs(x) for x in vector))
    return tuple(x // g for x in vector)


def facets_2d(polytope: IntPolytope) -> list[Halfspace]:
    """Supporting halfspaces of a 2D polytope with primitive integer normals.

    Degenerate cases are fully described too: a segment gets its two side
    constraints plus end caps, a point gets the four axis-aligned pins.
    """
    ring = ccw_vertex_ring(polytope)
    facets: list[Halfspace] = []
    if len(ring) == 1:
        (x, y) = ring[0]
        facets = [
            Halfspace((1, 0), x),
            Halfspace((-1, 0), -x),
            Halfspace((0, 1), y),
            Halfspace((0, -1), -y),
        ]
    elif len(ring) == 2:
        u, v = ring
        d = _primitive((v[0] - u[0], v[1] - u[1]))
        side = (d[1], -d[0])
        facets = [
            Halfspace(side, side[0] * u[0] + side[1] * u[1]),
            Halfspace((-side[0], -side[1]), -(side[0] * u[0] + side[1] * u[1])),
            Halfspace(d, d[0] * v[0] + d[1] * v[1]),
            Halfspace((-d[0], -d[1]), -(d[0] * u[0] + d[1] * u[1])),
        ]
    else:
        for u, v in zip(ring, ring[1:] + ring[:1]):
            direction = (v[0] - u[0], v[1] - u[1])
            normal = _primitive((direction[1], -direction[0]))
            facets.append(Halfspace(normal, normal[0] * u[0] + normal[1] * u[1]))
    return sorted(facets, key=lambda h: (h.normal, h.offset))
