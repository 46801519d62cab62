"""
Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``; matrices are tuples of row vectors.
"""
from fractions import Fraction
from math import gcd

from stretchkit.exceptions import DomainError

DEFAULT_PRECISION = 1e-9


def to_fraction(value):
    "Exact conversion of ints, Fractions, strings ('3/4', '0.25') and floats."
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise DomainError('rational', value, 'a rational number such as 3/4')
    return Fraction(value)


def exact_rational(value, precision=DEFAULT_PRECISION):
    "The closest rational to a float with denominator at most 1/precision."
    if not 0 < precision <= 1e-3:
        raise DomainError('precision', precision, '0 < precision <= 1e-3')
    return Fraction(value).limit_denominator(int(round(1.0 / precision)))


def vector(values):
    return tuple(to_fraction(v) for v in values)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(factor, v):
    return tuple(factor * a for a in v)


def centroid(points):
    points = list(points)
    count = len(points)
    return tuple(sum(coords, Fraction(0)) / count for coords in zip(*points))


def _row_reduce(rows):
    """
    Reduced row echelon form; returns (rows, pivot columns).
    """
    matrix = [list(row) for row in rows]
    pivots = []
    if not matrix:
        return matrix, pivots
    columns = len(matrix[0])
    r = 0
    for c in range(columns):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [value / lead for value in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix, pivots


def rank(rows):
    return len(_row_reduce(rows)[1])


def affine_rank(points):
    "Dimension of the affine hull of a non-empty point set."
    points = list(points)
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def nullspace(rows, columns):
    "A basis of {x : rows · x = 0}."
    reduced, pivots = _row_reduce(rows)
    free = [c for c in range(columns) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * columns
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def primitive(v):
    "Scale a non-zero rational vector to coprime integers."
    denominator = 1
    for a in v:
        denominator = denominator * a.denominator // gcd(denominator, a.denominator)
    integers = [int(a * denominator) for a in v]
    common = 0
    for a in integers:
        common = gcd(common, a)
    return tuple(Fraction(a // common) for a in integers)


def hyperplane_through(points):
    """
    The hyperplane a·x = b through n affinely independent points of Qⁿ, with
    ``a`` primitive; None if the points are affinely dependent.
    """
    base = points[0]
    normals = nullspace([sub(p, base) for p in points[1:]], len(base))
    if len(normals) != 1:
        return None
    normal = primitive(normals[0])
    return normal, dot(normal, base)


def matmul_vector(matrix, v):
    return tuple(dot(row, v) for row in matrix)


def determinant(matrix):
    matrix = [list(vector(row)) for row in matrix]
    size = len(matrix)
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if matrix[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            matrix[c], matrix[pivot] = matrix[pivot], matrix[c]
            det = -det
        det *= matrix[c][c]
        for i in range(c + 1, size):
            factor = matrix[i][c] / matrix[c][c]
            matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[c])]
    return det


def random_invertible(rng, n, bound=3):
    "A random integer matrix with non-zero determinant."
    while True:
        matrix = tuple(
            tuple(Fraction(int(a)) for a in row)
            for row in rng.integers(-bound, bound + 1, size=(n, n))
        )
        if determinant(matrix) != 0:
            return matrix
