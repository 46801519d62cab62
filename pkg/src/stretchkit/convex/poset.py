"""
Face posets, and the adherence calculus on them.

A ``FacePoset`` lists the proper faces of the boundary of a convex body
with their dimensions, the inclusion relation, and joins: the smallest
proper face containing two given faces, or None when only the body itself
does. Posets come either from an exact polytope or from a hand written
abstract description (for bodies with curved boundary pieces).
"""
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from stretchkit.convex import exact
from stretchkit.exceptions import NotAdherenceClosedError, PosetError, SpecFormatError

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class FaceRecord:
    id: str
    dim: int
    label: object = None


class FacePoset:
    def __init__(self, faces, inclusions, joins=None, arcs=(), name=None):
        """
        :param faces: the FaceRecords of all proper faces.
        :param inclusions: (sub, super) id pairs generating strict inclusion.
        :param joins: optional explicit join table {(f, g): id or None}; it
            must agree with the least common upper bound.
        :param arcs: (name, representative ids) pairs for curved boundary
            families.
        """
        self.name = name
        self.faces = {}
        for face in faces:
            if face.id in self.faces:
                raise PosetError("duplicate face id {id!r}".format(id=face.id))
            if face.dim < 0:
                raise PosetError("face {id!r} has negative dimension".format(id=face.id))
            self.faces[face.id] = face
        self.ids = sorted(self.faces, key=lambda i: (self.faces[i].dim, i))

        self._above = {i: set() for i in self.faces}
        for sub, sup in inclusions:
            for face in (sub, sup):
                if face not in self.faces:
                    raise PosetError("inclusion mentions unknown face {id!r}".format(id=face))
            self._above[sub].add(sup)
        self._close_transitively()

        self.arcs = tuple((arc_name, tuple(reps)) for arc_name, reps in arcs)
        for _, reps in self.arcs:
            for rep in reps:
                if rep not in self.faces:
                    raise PosetError("arc representative {id!r} is not a face".format(id=rep))

        self._joins = {}
        for (first, second), expected in (joins or {}).items():
            derived = self.join(first, second)
            if derived != expected:
                raise PosetError(
                    "listed join of {f!r} and {g!r} is {e!r}, but the least upper bound is {d!r}".format(
                        f=first, g=second, e=expected, d=derived,
                    )
                )

    def _close_transitively(self):
        changed = True
        while changed:
            changed = False
            for face in self.ids:
                reach = set(self._above[face])
                for sup in self._above[face]:
                    reach |= self._above[sup]
                if face in reach:
                    raise PosetError("inclusion cycle through {id!r}".format(id=face))
                if reach != self._above[face]:
                    self._above[face] = reach
                    changed = True

    def __repr__(self):
        return '<FacePoset {name} faces={count}>'.format(name=self.name or '', count=len(self.faces))

    def __len__(self):
        return len(self.faces)

    def dim(self, face):
        return self.faces[face].dim

    def superfaces(self, face):
        "Strict superfaces."
        return set(self._above[face])

    def subfaces(self, face):
        "Strict subfaces."
        return {other for other in self.ids if face in self._above[other]}

    def contains(self, big, small):
        return big == small or big in self._above[small]

    def join(self, first, second):
        "The least proper face containing both, or None."
        key = (min(first, second), max(first, second))
        if key not in self._joins:
            upper = [
                face for face in self.ids
                if self.contains(face, first) and self.contains(face, second)
            ]
            least = [face for face in upper if all(self.contains(other, face) for other in upper)]
            if upper and not least:
                raise PosetError(
                    "faces {f!r} and {g!r} have no least common upper bound".format(f=first, g=second)
                )
            self._joins[key] = least[0] if least else None
        return self._joins[key]

    # Adherence

    def is_adherent(self, face, candidate):
        """
        Whether ``candidate`` (a face containing ``face``) adheres to it:
        every face containing ``face`` shares a proper face with ``candidate``.
        """
        if not self.contains(candidate, face):
            return False
        return all(
            self.join(candidate, other) is not None
            for other in self.superfaces(face) | {face}
        )

    def adherence_closure(self, face):
        return self._closures[face]

    @cached_property
    def _closures(self):
        closures = {}
        for face in self.ids:
            adherent = [
                other for other in self.superfaces(face) | {face}
                if self.is_adherent(face, other)
            ]
            maximal = [f for f in adherent if not any(g in self._above[f] for g in adherent)]
            if len(maximal) != 1:
                raise PosetError(
                    "face {id!r} has {count} maximal adherent faces".format(id=face, count=len(maximal))
                )
            closures[face] = maximal[0]
        return closures

    def is_adherence_closed(self, face):
        return self.adherence_closure(face) == face

    def fdim(self, face):
        return self.dim(self.adherence_closure(face))

    def _require_closed(self, face):
        closure = self.adherence_closure(face)
        if closure != face:
            raise NotAdherenceClosedError(face, closure)

    def adherence_core(self, face):
        self._require_closed(face)
        return {face} | {sub for sub in self.subfaces(face) if self.adherence_closure(sub) == face}

    def is_adherence_complete(self, face):
        return self.adherence_core(face) == self.subfaces(face) | {face}

    # F-dim chains

    def _steps_below(self, face):
        "Subfaces of strictly smaller face-dimension."
        return [sub for sub in self.subfaces(face) if self.fdim(sub) < self.fdim(face)]

    def _saturated(self, low, high):
        "No face strictly between low and high has face-dimension strictly between theirs."
        return not any(
            self.contains(high, middle) and middle != high
            and self.fdim(low) < self.fdim(middle) < self.fdim(high)
            for middle in self.superfaces(low)
        )

    @cached_property
    def _heights(self):
        heights = {}
        for face in sorted(self.ids, key=lambda f: (self.fdim(f), self.dim(f), f)):
            below = [sub for sub in self._steps_below(face) if self._saturated(sub, face)]
            heights[face] = 1 + min((heights[sub] for sub in below), default=0)
        return heights

    @cached_property
    def _depths(self):
        depths = {}
        for face in sorted(self.ids, key=lambda f: (-self.fdim(f), -self.dim(f), f)):
            above = [
                sup for sup in self.superfaces(face)
                if self.fdim(sup) > self.fdim(face) and self._saturated(face, sup)
            ]
            depths[face] = 1 + min((depths[sup] for sup in above), default=0)
        return depths

    def adherence_height(self, face):
        "Length of the shortest maximal F-dim ascending chain ending at ``face``."
        return self._heights[face]

    def adherence_depth(self, face):
        "Length of the shortest maximal F-dim ascending chain starting at ``face``."
        return self._depths[face]

    def adim(self, face):
        return self.adherence_height(face) + self.adherence_depth(face) - 2

    def check_intersections(self):
        """
        Faces whose common lower bounds have no greatest element; for a face
        lattice this is empty.
        """
        problems = []
        for first, second in combinations(self.ids, 2):
            lower = [f for f in self.ids if self.contains(first, f) and self.contains(second, f)]
            if lower and not any(all(self.contains(g, f) for f in lower) for g in lower):
                problems.append((first, second))
        return problems

    # Serialization

    def to_json(self):
        document = {
            'schema_version': SCHEMA_VERSION,
            'name': self.name,
            'faces': [
                {'id': face, 'dim': self.dim(face), 'label': _jsonable(self.faces[face].label)}
                for face in self.ids
            ],
            'inclusions': sorted([sub, sup] for sub in self.ids for sup in self._above[sub]),
            'joins': [
                [first, second, self.join(first, second)]
                for first, second in combinations(self.ids, 2)
            ],
            'arcs': [{'name': name, 'representatives': list(reps)} for name, reps in self.arcs],
        }
        return document

    @classmethod
    def from_json(cls, document, source='poset document'):
        try:
            if document.get('schema_version') != SCHEMA_VERSION:
                raise SpecFormatError(
                    source, "unsupported schema_version {v!r}".format(v=document.get('schema_version'))
                )
            faces = [FaceRecord(str(f['id']), int(f['dim']), f.get('label')) for f in document['faces']]
            inclusions = [(str(sub), str(sup)) for sub, sup in document.get('inclusions', [])]
            joins = {
                (str(first), str(second)): (None if join is None else str(join))
                for first, second, join in document.get('joins', [])
            }
            arcs = [(arc['name'], [str(r) for r in arc['representatives']]) for arc in document.get('arcs', [])]
        except (AttributeError, KeyError, TypeError, ValueError) as e:
            raise SpecFormatError(source, "malformed poset ({e})".format(e=e))
        return cls(faces, inclusions, joins=joins, arcs=arcs, name=document.get('name'))

    @classmethod
    def load(cls, path):
        try:
            with open(path, encoding='utf-8') as f:
                document = json.load(f)
        except FileNotFoundError:
            raise SpecFormatError(path, "file not found")
        except json.JSONDecodeError as e:
            raise SpecFormatError(path, "invalid JSON ({e})".format(e=e))
        return cls.from_json(document, source=path)


def _jsonable(label):
    if isinstance(label, (frozenset, set)):
        return sorted(label)
    return label


def face_report(poset):
    "Dimension data and adherence data for every face."
    return {
        face: {
            'dim': poset.dim(face),
            'fdim': poset.fdim(face),
            'closure': poset.adherence_closure(face),
            'closed': poset.is_adherence_closed(face),
            'complete': poset.is_adherence_complete(face) if poset.is_adherence_closed(face) else None,
            'height': poset.adherence_height(face),
            'depth': poset.adherence_depth(face),
            'adim': poset.adim(face),
        }
        for face in poset.ids
    }


def build_face_lattice(polytope):
    """
    The poset of proper faces of a polytope. Faces are the non-empty
    intersections of facet vertex sets; each face is labelled with its
    vertex indices.
    """
    facet_sets = {facet.vertices for facet in polytope.facets}
    faces = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        found = set()
        for face in frontier:
            for facet in facet_sets:
                common = face & facet
                if common and common not in faces:
                    found.add(common)
        faces |= found
        frontier = found

    def dimension(vertex_set):
        return exact.affine_rank([polytope.vertices[i] for i in vertex_set])

    ordered = sorted(faces, key=lambda f: (dimension(f), sorted(f)))
    ids = {face: 'f{i}'.format(i=i) for i, face in enumerate(ordered)}
    records = [FaceRecord(ids[face], dimension(face), face) for face in ordered]
    inclusions = [
        (ids[small], ids[big])
        for small in ordered for big in ordered
        if small < big
    ]
    return PolytopeFacePoset(polytope, records, inclusions)


class PolytopeFacePoset(FacePoset):
    "A face poset whose faces are vertex sets of an exact polytope."
    def __init__(self, polytope, faces, inclusions):
        self.polytope = polytope
        super().__init__(faces, inclusions, name='polytope')
        self._by_vertices = {record.label: record.id for record in faces}

    def vertex_set(self, face):
        return self.faces[face].label

    def face_of_vertices(self, vertex_set):
        return self._by_vertices.get(frozenset(vertex_set))

    def face_for_point(self, point):
        "The face whose relative interior contains a boundary point."
        tight = self.polytope.tight_facets(point)
        common = frozenset.intersection(*(facet.vertices for facet in tight))
        return self._by_vertices[common]

    def point_dim(self, point):
        return self.dim(self.face_for_point(point))


def stadium_poset():
    """
    The boundary of a stadium: two flat edges e (ends x, y) and e' (ends x',
    y') joined by two half circles. Each circle is a family of 0-dimensional
    faces, represented by one named point.
    """
    faces = [
        FaceRecord('x', 0), FaceRecord('y', 0), FaceRecord("x'", 0), FaceRecord("y'", 0),
        FaceRecord('c', 0, 'arc point'), FaceRecord("c'", 0, 'arc point'),
        FaceRecord('e', 1), FaceRecord("e'", 1),
    ]
    inclusions = [('x', 'e'), ('y', 'e'), ("x'", "e'"), ("y'", "e'")]
    arcs = [('arc', ['c']), ("arc'", ["c'"])]
    return FacePoset(faces, inclusions, arcs=arcs, name='stadium')


def square_poset():
    "The boundary of a square: four vertices, four edges."
    faces = [FaceRecord(v, 0) for v in ('w', 'x', 'y', 'z')]
    faces += [FaceRecord(e, 1) for e in ('wx', 'xy', 'yz', 'zw')]
    inclusions = [
        ('w', 'wx'), ('x', 'wx'), ('x', 'xy'), ('y', 'xy'),
        ('y', 'yz'), ('z', 'yz'), ('z', 'zw'), ('w', 'zw'),
    ]
    return FacePoset(faces, inclusions, name='square')


BUILTIN_POSETS = {
    'stadium': stadium_poset,
    'square': square_poset,
}
