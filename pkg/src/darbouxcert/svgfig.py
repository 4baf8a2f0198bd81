"""Deterministic SVG rendering of two-dimensional Newton polygons."""

from __future__ import annotations

from .polytope import IntPolytope, ccw_vertex_ring, lattice_points_nonneg

# Pixels per lattice step; the canvas leaves a one-cell margin and always
# includes the origin so the axes are visible.
SCALE = 32
DOT_RADIUS = 5


def emit_svg(polytope: IntPolytope, lattice_overlay: bool = False) -> str:
    """Render the polygon as a closed path, CCW from the lex-min vertex.

    With lattice_overlay, the nonnegative lattice points of the polytope are
    drawn as filled circles.  The output is byte-deterministic.
    """
    if polytope.n != 2:
        raise ValueError("SVG rendering supports dimension 2 only")
    if polytope.is_empty:
        raise ValueError("cannot render an empty polytope")
    ring = ccw_vertex_ring(polytope)
    dots = lattice_points_nonneg(polytope) if lattice_overlay else []
    points = list(polytope.vertices) + dots + [(0, 0)]
    min_x = min(p[0] for p in points)
    max_x = max(p[0] for p in points)
    min_y = min(p[1] for p in points)
    max_y = max(p[1] for p in points)
    width = (max_x - min_x + 2) * SCALE
    height = (max_y - min_y + 2) * SCALE

    def px(point):
        return ((point[0] - min_x + 1) * SCALE, (max_y - point[1] + 1) * SCALE)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    x_axis = px((0, 0))[1]
    y_axis = px((0, 0))[0]
    lines.append(f'<line x1="0" y1="{x_axis}" x2="{width}" y2="{x_axis}" stroke="#999" stroke-width="1"/>')
    lines.append(f'<line x1="{y_axis}" y1="0" x2="{y_axis}" y2="{height}" stroke="#999" stroke-width="1"/>')
    start = px(ring[0])
    path = f"M{start[0]} {start[1]}"
    for vertex in ring[1:]:
        x, y = px(vertex)
        path += f" L{x} {y}"
    path += " Z"
    lines.append(f'<path d="{path}" fill="none" stroke="black" stroke-width="2"/>')
    for dot in dots:
        x, y = px(dot)
        lines.append(f'<circle cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
