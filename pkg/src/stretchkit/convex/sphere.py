"""
The unit spheres of the Thurston norm at a point of the torus' Teichmüller
space, sampled through slope covectors.

On the cotangent side, the covectors d log ℓ_s should all be extreme points
of their hull, which contains the origin. On the tangent side, the unit
sphere is flat wherever a single covector attains the norm: a segment for
each slope.
"""
import math

from stretchkit.convex import exact
from stretchkit.convex.polytope import RationalPolytope
from stretchkit.exceptions import DegeneratePolytopeError
from stretchkit.surface.torus import TangentVec

COLLINEARITY_TOLERANCE = 1e-4


def dual_sphere_experiment(table, precision=exact.DEFAULT_PRECISION):
    """
    Hull the covectors of a slope-indexed table after rationalizing them.

    Reports which slopes are hull vertices and whether the origin is
    strictly inside.
    """
    if len(table) < 3:
        raise DegeneratePolytopeError(
            "{count} covectors cannot bound a region of the plane".format(count=len(table))
        )
    points = {
        slope: (
            exact.exact_rational(covector.clength, precision),
            exact.exact_rational(covector.ctwist, precision),
        )
        for slope, covector in table.items()
    }
    hull = RationalPolytope.from_points(points.values())
    vertices = set(hull.vertices)
    missing = sorted(str(slope) for slope, point in points.items() if point not in vertices)
    return {
        'covectors': len(points),
        'hull_vertices': len(hull.vertices),
        'facets': len(hull.facets),
        'non_vertices': missing,
        'all_vertices': not missing,
        'origin_interior': hull.origin_is_interior(),
    }


def primal_sphere_experiment(table, slopes, directions=720, tolerance=COLLINEARITY_TOLERANCE):
    """
    Sample the unit tangent sphere in ``directions`` evenly spaced
    directions and group the boundary points by the slope attaining the
    norm. For each requested slope, reports how many directions it wins and
    how far its boundary points are from the segment through the extreme
    ones.
    """
    winners = {}
    for j in range(directions):
        angle = 2.0 * math.pi * j / directions
        direction = TangentVec(math.cos(angle), math.sin(angle))
        top, argmax = -math.inf, None
        for slope in sorted(table):
            value = table[slope](direction)
            if value > top:
                top, argmax = value, slope
        if top <= 0:
            raise DegeneratePolytopeError("the covectors do not surround the origin")
        point = (direction.dlength / top, direction.dtwist / top)
        winners.setdefault(argmax, []).append(point)

    report = {}
    for slope in slopes:
        points = winners.get(slope, [])
        entry = {'directions': len(points), 'edge_length': 0.0, 'collinearity': 0.0, 'flat': False}
        if len(points) >= 2:
            first, last = _extremes(points)
            dx, dy = last[0] - first[0], last[1] - first[1]
            length = math.hypot(dx, dy)
            residual = max(abs(dx * (p[1] - first[1]) - dy * (p[0] - first[0])) / length for p in points)
            entry.update(edge_length=length, collinearity=residual, flat=residual <= tolerance)
        report[str(slope)] = entry
    return report


def _extremes(points):
    "The pair of points furthest apart."
    best, pair = -1.0, (points[0], points[0])
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            distance = math.hypot(p[0] - q[0], p[1] - q[1])
            if distance > best:
                best, pair = distance, (p, q)
    return pair
