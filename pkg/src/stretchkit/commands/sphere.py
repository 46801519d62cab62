from stretchkit.convex.sphere import COLLINEARITY_TOLERANCE, dual_sphere_experiment, primal_sphere_experiment
from stretchkit.exceptions import ValidationFlagError
from stretchkit.surface.metric import covector_table
from stretchkit.surface.torus import MARKOV333, Marking, Slope, enumerate_slopes

from .base import BaseCommand
from .inputs import parse_slopes, parse_surface


class SphereCommand(BaseCommand):
    "Shared options of the unit sphere experiments."
    default_depth = 5

    def add_options(self, parser):
        parser.add_argument(
            '--x',
            type=parse_surface,
            default=MARKOV333,
            help='the base point (default: markov333)'
        )
        parser.add_argument(
            '--slope',
            type=Slope.parse,
            default=Slope(0, 1),
            help='the curve whose Fenchel-Nielsen chart is used (default: 0/1)'
        )
        parser.add_argument(
            '--depth',
            type=int,
            help='Farey depth of the slope covectors (default: {depth})'.format(depth=self.default_depth)
        )
        parser.add_argument(
            '--fd-step',
            dest='fd_step',
            type=float,
            help='base finite difference step (default: 1e-4)'
        )

    def experiment_spec(self, options):
        if options.get('depth') is None and 'depth' not in self.config:
            options['depth'] = self.default_depth
        return super().experiment_spec(options)

    def covectors(self, spec, x, slope):
        "Slope covectors at x, keyed by slopes of the standard marking."
        marking = Marking.for_slope(slope)
        point = marking.chart_point(x)
        self.log("sampling {count} covectors at (l={point.length:.6f}, tau={point.twist:.6f})".format(
            count=len(enumerate_slopes(spec.depth)), point=point,
        ))
        table = covector_table(point, spec.depth, spec.fd_step)
        return {marking.from_local(local): covector for local, covector in table.items()}


class DualSphereCommand(SphereCommand):
    command = 'dual-sphere'
    description = 'Check that the slope covectors are extreme points of the dual unit ball.'

    def run(self, spec, x=MARKOV333, slope=Slope(0, 1)):
        table = self.covectors(spec, x, slope)
        result = dual_sphere_experiment(table, precision=spec.precision)
        result['table'] = {
            str(s): [covector.clength, covector.ctwist]
            for s, covector in sorted(table.items())
        }
        self.write_json(spec, result, x=list(x.traces), slope=str(slope))
        if not (result['all_vertices'] and result['origin_interior']):
            raise ValidationFlagError(
                self.command,
                {'non_vertices': result['non_vertices'], 'origin_interior': result['origin_interior']},
            )
        return result


class PrimalSphereCommand(SphereCommand):
    command = 'primal-sphere'
    description = 'Sample the unit tangent sphere and look for a flat edge per slope.'

    def add_options(self, parser):
        super().add_options(parser)
        parser.add_argument(
            '--slopes',
            type=parse_slopes,
            default=parse_slopes('0/1,1/0,1/1,-1/1'),
            help='slopes whose edges are examined (default: 0/1,1/0,1/1,-1/1)'
        )
        parser.add_argument(
            '--directions',
            type=int,
            default=720,
            help='number of sampled directions (default: 720)'
        )
        parser.add_argument(
            '--tolerance',
            type=float,
            help='collinearity tolerance (default: {t})'.format(t=COLLINEARITY_TOLERANCE)
        )

    def experiment_spec(self, options):
        if options.get('tolerance') is None and 'tolerance' not in self.config:
            options['tolerance'] = COLLINEARITY_TOLERANCE
        return super().experiment_spec(options)

    def run(self, spec, x=MARKOV333, slope=Slope(0, 1), slopes=(), directions=720):
        table = self.covectors(spec, x, slope)
        report = primal_sphere_experiment(table, slopes, directions=directions, tolerance=spec.tolerance)
        self.write_json(spec, {'edges': report}, x=list(x.traces), slope=str(slope), directions=directions)
        curved = sorted(name for name, entry in report.items() if not entry['flat'])
        if curved:
            raise ValidationFlagError(self.command, {'not_flat': curved})
        return report
