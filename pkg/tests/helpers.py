"""Shared test utilities: builders and independent geometry oracles.

The 2D oracle uses gift wrapping and edge-sign membership so it shares no
code path with the package's monotone chain or simplex feasibility test.
"""

from __future__ import annotations

from fractions import Fraction

from darbouxcert import FieldScalar, LaurentPoly


def fs(value, k=0):
    return FieldScalar.from_fraction(k, Fraction(value))


def t_param(index, k):
    return FieldScalar.parameter(k, index)


def lp(n, k, terms):
    return LaurentPoly(n, k, terms)


def rand_poly(rng, n, k=0, max_terms=4, exp_lo=0, exp_hi=4, positive=False):
    """Random sparse polynomial; positive=True forces positive coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randint(exp_lo, exp_hi) for _ in range(n))
        num = rng.randint(1, 9)
        den = rng.randint(1, 9)
        if not positive and rng.random() < 0.5:
            num = -num
        terms[exp] = terms.get(exp, Fraction(0)) + Fraction(num, den)
    poly = LaurentPoly(n, k, terms)
    if poly.is_zero():
        return LaurentPoly.constant(n, k, 1)
    return poly


def rand_scalar(rng, k, max_terms=3, max_deg=2):
    """Random nonzero-denominator field scalar with small parameter degrees."""
    from darbouxcert import ParamPoly

    def rand_param_poly(allow_zero):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exp = tuple(rng.randint(0, max_deg) for _ in range(k))
            terms[exp] = terms.get(exp, Fraction(0)) + Fraction(
                rng.randint(-5, 5), rng.randint(1, 5)
            )
        poly = ParamPoly(k, terms)
        if poly.is_zero() and not allow_zero:
            return ParamPoly.constant(k, 1)
        return poly

    return FieldScalar(rand_param_poly(True), rand_param_poly(False))


# --- independent exact 2D geometry oracle -------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2d_oracle(points):
    """Vertex set of the 2D hull via gift wrapping (Jarvis march)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    start = pts[0]
    ring = [start]
    current = start
    while True:
        candidate = None
        for p in pts:
            if p == current:
                continue
            if candidate is None:
                candidate = p
                continue
            turn = _cross(current, candidate, p)
            far = (p[0] - current[0]) ** 2 + (p[1] - current[1]) ** 2 > (
                candidate[0] - current[0]
            ) ** 2 + (candidate[1] - current[1]) ** 2
            if turn < 0 or (turn == 0 and far):
                candidate = p
        if candidate == start:
            break
        ring.append(candidate)
        current = candidate
    return sorted(set(ring))


def ring2d_oracle(points):
    """CCW ring (gift wrapping order), for membership tests."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    start = pts[0]
    ring = [start]
    current = start
    while True:
        candidate = None
        for p in pts:
            if p == current:
                continue
            if candidate is None:
                candidate = p
                continue
            turn = _cross(current, candidate, p)
            far = (p[0] - current[0]) ** 2 + (p[1] - current[1]) ** 2 > (
                candidate[0] - current[0]
            ) ** 2 + (candidate[1] - current[1]) ** 2
            if turn < 0 or (turn == 0 and far):
                candidate = p
        if candidate == start:
            break
        ring.append(candidate)
        current = candidate
    return ring


def inside2d_oracle(ring, point):
    """Is the (possibly rational) point inside the CCW ring? Sign test only."""
    point = (Fraction(point[0]), Fraction(point[1]))
    if len(ring) == 1:
        return point == (Fraction(ring[0][0]), Fraction(ring[0][1]))
    if len(ring) == 2:
        a, b = ring
        if _cross(a, b, point) != 0:
            return False
        return (
            min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= point[1] <= max(a[1], b[1])
        )
    return all(
        _cross(ring[i], ring[(i + 1) % len(ring)], point) >= 0
        for i in range(len(ring))
    )


def lattice_count_oracle(points):
    """Count nonnegative lattice points of hull(points) by sign membership."""
    ring = ring2d_oracle(points)
    max_x = max(p[0] for p in ring)
    max_y = max(p[1] for p in ring)
    if max_x < 0 or max_y < 0:
        return 0
    return sum(
        1
        for x in range(0, max_x + 1)
        for y in range(0, max_y + 1)
        if inside2d_oracle(ring, (x, y))
    )
