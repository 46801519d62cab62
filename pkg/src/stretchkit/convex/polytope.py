"""
Exact convex polytopes in dimension at most 4.

Facets come from Qhull on floating point copies of the vertices, and are
then rebuilt and checked in exact arithmetic; if the exact facets fail to
close up into a polytope boundary, every n-subset of vertices is tried
instead. Faces are intersections of facet vertex sets.
"""
import csv
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from stretchkit.convex import exact
from stretchkit.exceptions import DegeneratePolytopeError, ExteriorPointError, InteriorPointError

MAX_DIMENSION = 4
# Applies from dimension 3 on; planar hulls use the exact monotone chain.
MAX_VERTICES = 60


@dataclass(frozen=True)
class Facet:
    "The supporting inequality normal·x <= offset, tight exactly at ``vertices``."
    normal: tuple
    offset: Fraction
    vertices: frozenset


def _check_full_dimensional(points, n):
    if not points:
        raise DegeneratePolytopeError("no points")
    if any(len(p) != n for p in points):
        raise DegeneratePolytopeError("points of mixed dimension")
    if exact.affine_rank(points) != n:
        raise DegeneratePolytopeError(
            "the points span an affine subspace of dimension {r} < {n}".format(
                r=exact.affine_rank(points), n=n,
            )
        )


def _exact_facet(points, indices):
    "The facet of the hull of ``points`` spanned by ``indices``, or None."
    plane = exact.hyperplane_through([points[i] for i in indices])
    if plane is None:
        return None
    normal, offset = plane
    values = [exact.dot(normal, p) for p in points]
    if all(v <= offset for v in values):
        pass
    elif all(v >= offset for v in values):
        normal, offset = tuple(-a for a in normal), -offset
    else:
        return None
    tight = frozenset(i for i, p in enumerate(points) if exact.dot(normal, p) == offset)
    return Facet(normal=normal, offset=offset, vertices=tight)


def _qhull_facets(points):
    hull = ConvexHull(np.array([[float(c) for c in p] for p in points]))
    facets = {}
    for simplex in hull.simplices:
        facet = _exact_facet(points, [int(i) for i in simplex])
        if facet is not None:
            facets[(facet.normal, facet.offset)] = facet
    return list(facets.values())


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _planar_facets(points):
    """
    Edges of a polygon by the monotone chain, in exact arithmetic.

    Points on an edge but not at a corner are dropped from the chain and
    picked up again as tight points of the edge.
    """
    order = sorted(range(len(points)), key=lambda i: points[i])

    def chain(indices):
        hull = []
        for i in indices:
            while len(hull) >= 2 and _turn(points[hull[-2]], points[hull[-1]], points[i]) <= 0:
                hull.pop()
            hull.append(i)
        return hull

    lower, upper = chain(order), chain(reversed(order))
    corners = lower[:-1] + upper[:-1]
    facets = {}
    for a, b in zip(corners, corners[1:] + corners[:1]):
        facet = _exact_facet(points, [a, b])
        if facet is not None:
            facets[(facet.normal, facet.offset)] = facet
    return list(facets.values())


def _brute_force_facets(points):
    n = len(points[0])
    facets = {}
    for indices in combinations(range(len(points)), n):
        facet = _exact_facet(points, indices)
        if facet is not None and exact.affine_rank([points[i] for i in facet.vertices]) == n - 1:
            facets[(facet.normal, facet.offset)] = facet
    return list(facets.values())


def _facet_ridges(points, facet):
    "Ridges of a facet as vertex index sets, found inside the facet's own hyperplane."
    indices = sorted(facet.vertices)
    k = next(i for i, a in enumerate(facet.normal) if a != 0)
    # Forgetting a coordinate along which the normal is non-zero is injective on the hyperplane.
    projected = [p[:k] + p[k + 1:] for p in (points[i] for i in indices)]
    if len(projected[0]) == 1:
        values = [p[0] for p in projected]
        return [
            frozenset(i for i, v in zip(indices, values) if v == min(values)),
            frozenset(i for i, v in zip(indices, values) if v == max(values)),
        ]
    return [frozenset(indices[j] for j in ridge.vertices) for ridge in _brute_force_facets(projected)]


def _closes_up(facets, points):
    "Every ridge of every facet must lie in exactly one other facet."
    n = len(points[0])
    if len(facets) < n + 1:
        return False
    for facet in facets:
        for ridge in _facet_ridges(points, facet):
            if sum(1 for other in facets if other is not facet and ridge <= other.vertices) != 1:
                return False
    return True


def compute_facets(points):
    n = len(points[0])
    if n == 1:
        values = [p[0] for p in points]
        low, high = min(values), max(values)
        return [
            Facet((Fraction(-1),), -low, frozenset(i for i, v in enumerate(values) if v == low)),
            Facet((Fraction(1),), high, frozenset(i for i, v in enumerate(values) if v == high)),
        ]
    if n == 2:
        return _planar_facets(points)
    try:
        facets = _qhull_facets(points)
        if _closes_up(facets, points):
            return facets
    except QhullError:
        pass
    return _brute_force_facets(points)


class RationalPolytope:
    """
    A full-dimensional polytope given by its vertices (exact rationals).

    Use ``from_points`` to discard points which are not extreme.
    """
    def __init__(self, vertices):
        vertices = sorted(set(exact.vector(v) for v in vertices))
        if not vertices:
            raise DegeneratePolytopeError("no vertices")
        n = len(vertices[0])
        if not 1 <= n <= MAX_DIMENSION:
            raise DegeneratePolytopeError(
                "ambient dimension {n} is outside 1..{max}".format(n=n, max=MAX_DIMENSION)
            )
        if n > 2 and len(vertices) > MAX_VERTICES:
            raise DegeneratePolytopeError(
                "{count} vertices exceed the limit of {max}".format(count=len(vertices), max=MAX_VERTICES)
            )
        _check_full_dimensional(vertices, n)
        self.vertices = tuple(vertices)
        self.dim = n
        self._facets = None

    @classmethod
    def from_points(cls, points):
        points = sorted(set(exact.vector(p) for p in points))
        if not points:
            raise DegeneratePolytopeError("no points")
        _check_full_dimensional(points, len(points[0]))
        facets = compute_facets(points)
        n = len(points[0])
        extreme = [
            p for i, p in enumerate(points)
            if exact.rank([f.normal for f in facets if i in f.vertices]) == n
        ]
        return cls(extreme)

    def __repr__(self):
        return '<RationalPolytope dim={self.dim} vertices={count}>'.format(self=self, count=len(self.vertices))

    def __eq__(self, other):
        return isinstance(other, RationalPolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def facets(self):
        if self._facets is None:
            facets = compute_facets(list(self.vertices))
            self._facets = sorted(facets, key=lambda f: sorted(f.vertices))
        return self._facets

    def values(self, point):
        return [exact.dot(f.normal, point) - f.offset for f in self.facets]

    def contains(self, point):
        point = exact.vector(point)
        return all(v <= 0 for v in self.values(point))

    def tight_facets(self, point):
        """
        The facets through a boundary point; raises if the point is interior
        or outside.
        """
        point = exact.vector(point)
        values = self.values(point)
        if any(v > 0 for v in values):
            raise ExteriorPointError(point)
        tight = [f for f, v in zip(self.facets, values) if v == 0]
        if not tight:
            raise InteriorPointError(point)
        return tight

    def origin_is_interior(self):
        return all(f.offset > 0 for f in self.facets)

    def image(self, matrix):
        "The image under an (exact, invertible) linear map."
        matrix = tuple(exact.vector(row) for row in matrix)
        return RationalPolytope(exact.matmul_vector(matrix, v) for v in self.vertices)

    def to_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['x{i}'.format(i=i) for i in range(self.dim)])
        for v in self.vertices:
            writer.writerow([str(c) for c in v])


def read_vertex_csv(stream):
    "Points from a CSV file with a header row; entries may be fractions."
    reader = csv.reader(stream)
    rows = [row for row in reader if row and not row[0].startswith('#')]
    return [exact.vector(row) for row in rows[1:]]


def cube(n, half_width=1):
    half_width = Fraction(half_width)
    return RationalPolytope(
        tuple(half_width * s for s in signs)
        for signs in _sign_vectors(n)
    )


def square(side=2):
    "The square [0, side]²."
    side = Fraction(side)
    return RationalPolytope([(0, 0), (side, 0), (0, side), (side, side)])


def simplex(n):
    "The standard simplex, translated so that its barycentre is the origin."
    points = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    points.append(tuple(Fraction(0) for _ in range(n)))
    center = exact.centroid(points)
    return RationalPolytope(exact.sub(p, center) for p in points)


def cross_polytope(n, radius=1):
    radius = Fraction(radius)
    points = []
    for i in range(n):
        for sign in (1, -1):
            points.append(tuple(radius * sign if j == i else Fraction(0) for j in range(n)))
    return RationalPolytope(points)


def random_polytope(rng, n=3, count=12, bound=10):
    """
    The hull of random integer points together with ±(bound/2)·eᵢ, so that
    the origin is strictly inside.
    """
    points = [tuple(int(c) for c in row) for row in rng.integers(-bound, bound + 1, size=(count, n))]
    half = bound // 2
    for i in range(n):
        for sign in (1, -1):
            points.append(tuple(sign * half if j == i else 0 for j in range(n)))
    return RationalPolytope.from_points(points)


def _sign_vectors(n):
    if n == 0:
        return [()]
    return [rest + (s,) for rest in _sign_vectors(n - 1) for s in (-1, 1)]


NAMED = {
    'cube': lambda n: cube(n),
    'simplex': simplex,
    'cross': cross_polytope,
    'square': lambda n: square(n),
}
