import numpy as np

from stretchkit.convex import exact
from stretchkit.convex.duality import (
    codim,
    dual_body,
    face_point,
    is_exposed,
    linear_invariance_check
)
from stretchkit.convex.polytope import NAMED, RationalPolytope, random_polytope, read_vertex_csv
from stretchkit.convex.poset import BUILTIN_POSETS, FacePoset, build_face_lattice, face_report
from stretchkit.exceptions import DomainError, InvalidArgumentsError, SpecFormatError, ValidationFlagError

from .base import BaseCommand

ACTIONS = ('analyze', 'dual')


def load_polytope(text, rng):
    """
    ``<name>:<n>`` for a named polytope (cube, simplex, cross, square, or
    random), or the path of a vertex CSV file.
    """
    name, sep, size = text.partition(':')
    if sep and (name in NAMED or name == 'random'):
        try:
            n = int(size)
        except ValueError:
            raise SpecFormatError(repr(text), "expected <name>:<integer>")
        if name == 'random':
            return random_polytope(rng, n=n)
        return NAMED[name](n)
    try:
        with open(text, encoding='utf-8', newline='') as f:
            return RationalPolytope.from_points(read_vertex_csv(f))
    except FileNotFoundError:
        raise SpecFormatError(
            text, "not a named polytope ({names}, random) or a vertex CSV file".format(names=', '.join(NAMED))
        )
    except (ValueError, DomainError) as e:
        raise SpecFormatError(text, "malformed vertex ({e})".format(e=e))


def load_poset(text):
    if text in BUILTIN_POSETS:
        return BUILTIN_POSETS[text]()
    return FacePoset.load(text)


def polytope_report(polytope, lattice):
    "The face report of a polytope lattice, plus the normal-side data of each face."
    report = face_report(lattice)
    with_origin = polytope.origin_is_interior()
    for face, entry in report.items():
        vertex_set = lattice.vertex_set(face)
        entry['vertices'] = [list(polytope.vertices[i]) for i in sorted(vertex_set)]
        entry['exposed'] = is_exposed(polytope, vertex_set)
        if with_origin:
            entry['codim'] = codim(polytope, face_point(polytope, vertex_set))
    return report


class ConvexCommand(BaseCommand):
    command = 'convex'
    description = 'Analyze the faces of a convex body, or compute its polar dual.'

    def add_options(self, parser):
        parser.add_argument(
            'action',
            choices=ACTIONS,
            help='analyze: face lattice and dimensions; dual: polar dual and linear invariance'
        )
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument(
            '--poset',
            help='an abstract face poset: {names} or a JSON file'.format(names=', '.join(BUILTIN_POSETS))
        )
        source.add_argument(
            '--polytope',
            help='cube:<n>, simplex:<n>, cross:<n>, square:<side>, random:<n>, or a vertex CSV file'
        )
        parser.add_argument(
            '--maps',
            type=int,
            default=0,
            help='number of random invertible maps for the linear invariance check (dual)'
        )
        parser.add_argument(
            '--vertices',
            help='write the vertices of the polytope (analyze) or of its dual (dual) to this CSV file'
        )

    def run(self, spec, action='analyze', poset=None, polytope=None, maps=0, vertices=None):
        rng = np.random.default_rng(spec.seed)
        if poset is not None:
            if action != 'analyze':
                raise InvalidArgumentsError(
                    self.cmd_line.format(command=self.command), 'dual requires --polytope'
                )
            return self.analyze_poset(spec, load_poset(poset), source=poset)

        body = load_polytope(polytope, rng)
        if action == 'analyze':
            return self.analyze_polytope(spec, body, source=polytope, vertices=vertices)
        return self.dual(spec, body, rng, maps, source=polytope, vertices=vertices)

    def write_vertices(self, polytope, path):
        if path is None:
            return
        with open(path, 'w', encoding='utf-8', newline='') as f:
            polytope.to_csv(f)
        self.log("wrote {count} vertices to {path}".format(count=len(polytope.vertices), path=path))

    def analyze_poset(self, spec, poset, source):
        self.log("analyzing {count} faces of {name}".format(count=len(poset), name=poset.name))
        result = {
            'lattice': poset.to_json(),
            'faces': face_report(poset),
            'intersection_failures': [list(pair) for pair in poset.check_intersections()],
        }
        self.write_json(spec, result, source=source)
        return result

    def analyze_polytope(self, spec, polytope, source, vertices=None):
        lattice = build_face_lattice(polytope)
        self.log("{polytope}: {count} proper faces".format(polytope=polytope, count=len(lattice)))
        report = polytope_report(polytope, lattice)
        sums = sorted({
            entry['dim'] + entry['codim'] for entry in report.values() if 'codim' in entry
        })
        result = {
            'dimension': polytope.dim,
            'vertices': [list(v) for v in polytope.vertices],
            'facets': [
                {'normal': list(f.normal), 'offset': f.offset, 'vertices': sorted(f.vertices)}
                for f in polytope.facets
            ],
            'lattice': lattice.to_json(),
            'faces': report,
            'origin_interior': polytope.origin_is_interior(),
            'dim_plus_codim': sums,
        }
        self.write_json(spec, result, source=source)
        self.write_vertices(polytope, vertices)
        if sums and sums != [polytope.dim - 1]:
            raise ValidationFlagError(self.command, {'dim_plus_codim': sums})
        return result

    def dual(self, spec, polytope, rng, maps, source, vertices=None):
        dual = dual_body(polytope)
        double = dual_body(dual.polytope)
        self.log("dual of {polytope} has {count} vertices".format(polytope=polytope, count=len(dual.vertices)))
        checks = {}
        for _ in range(maps):
            matrix = exact.random_invertible(rng, polytope.dim)
            for name, passed in linear_invariance_check(polytope, matrix).items():
                checks[name] = checks.get(name, True) and passed
        result = {
            'vertices': [list(v) for v in dual.vertices],
            'facets': [
                {'normal': list(f.normal), 'offset': f.offset}
                for f in dual.polytope.facets
            ],
            'double_dual_is_primal': double.polytope == polytope,
            'linear_invariance': checks,
            'maps': maps,
        }
        self.write_json(spec, result, source=source)
        self.write_vertices(dual.polytope, vertices)
        failures = sorted(name for name, passed in checks.items() if not passed)
        if not result['double_dual_is_primal'] or failures:
            raise ValidationFlagError(
                self.command,
                {'double_dual_is_primal': result['double_dual_is_primal'], 'failed_invariants': failures},
            )
        return result
