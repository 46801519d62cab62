"""
Normals, polar duals, and linear invariance of the face calculus.
"""
from dataclasses import dataclass

from stretchkit.convex import exact
from stretchkit.convex.polytope import RationalPolytope
from stretchkit.convex.poset import build_face_lattice
from stretchkit.exceptions import DomainError, OriginNotInteriorError


def _require_origin(polytope):
    if not polytope.origin_is_interior():
        raise OriginNotInteriorError()


def normal_vertices(polytope, point):
    """
    The vertices of N_q = {w : w(q) = 1, w <= 1 on the body}: the tight facet
    normals a/b.
    """
    _require_origin(polytope)
    return [exact.scale(1 / f.offset, f.normal) for f in polytope.tight_facets(point)]


def codim(polytope, point):
    "The dimension of N_q at a boundary point."
    return exact.affine_rank(normal_vertices(polytope, point))


@dataclass(frozen=True)
class DualBody:
    primal: RationalPolytope
    polytope: RationalPolytope

    @property
    def vertices(self):
        return self.polytope.vertices


def dual_body(polytope):
    "The polar dual {w : w(v) <= 1 for all v}, whose vertices are the facet normals a/b."
    _require_origin(polytope)
    return DualBody(
        primal=polytope,
        polytope=RationalPolytope(exact.scale(1 / f.offset, f.normal) for f in polytope.facets),
    )


def is_exposed(polytope, vertex_set):
    """
    Whether some supporting hyperplane meets the polytope exactly in the
    face with these vertex indices: the sum of the facet inequalities through
    the face is the candidate.
    """
    vertex_set = frozenset(vertex_set)
    tight = [f for f in polytope.facets if vertex_set <= f.vertices]
    if not tight:
        return False
    normal = tuple(sum(coords) for coords in zip(*(f.normal for f in tight)))
    offset = sum(f.offset for f in tight)
    touching = frozenset(
        i for i, v in enumerate(polytope.vertices) if exact.dot(normal, v) == offset
    )
    return touching == vertex_set


def face_point(polytope, vertex_set):
    "A point in the relative interior of a face."
    return exact.centroid(polytope.vertices[i] for i in sorted(vertex_set))


# Face images, dimension, adherence, face-dimension, adherence height and
# depth, adherence-dimension, codimension.
INVARIANTS = (
    'faces', 'dim', 'adherent', 'fdim', 'height', 'depth', 'adim', 'codim',
)


def linear_invariance_check(polytope, matrix):
    """
    Recompute the face lattice of M(P) and compare, face by face, with the
    image of the lattice of P. Returns {invariant: bool}.
    """
    matrix = tuple(exact.vector(row) for row in matrix)
    if exact.determinant(matrix) == 0:
        raise DomainError('matrix', matrix, 'an invertible matrix')
    image = polytope.image(matrix)
    index = {v: i for i, v in enumerate(image.vertices)}
    moved = [index[exact.matmul_vector(matrix, v)] for v in polytope.vertices]

    before = build_face_lattice(polytope)
    after = build_face_lattice(image)

    correspondence = {}
    for face in before.ids:
        target = after.face_of_vertices(moved[i] for i in before.vertex_set(face))
        correspondence[face] = target

    result = {name: True for name in INVARIANTS}
    result['faces'] = (
        None not in correspondence.values()
        and len(set(correspondence.values())) == len(after)
    )
    if not result['faces']:
        return {name: False for name in INVARIANTS}

    with_origin = polytope.origin_is_interior()
    for face, target in correspondence.items():
        result['dim'] &= before.dim(face) == after.dim(target)
        result['fdim'] &= before.fdim(face) == after.fdim(target)
        result['adherent'] &= all(
            before.is_adherent(face, other) == after.is_adherent(target, correspondence[other])
            for other in before.ids
        )
        result['height'] &= before.adherence_height(face) == after.adherence_height(target)
        result['depth'] &= before.adherence_depth(face) == after.adherence_depth(target)
        result['adim'] &= before.adim(face) == after.adim(target)
        if with_origin:
            result['codim'] &= (
                codim(polytope, face_point(polytope, before.vertex_set(face)))
                == codim(image, face_point(image, after.vertex_set(target)))
            )
    return result
