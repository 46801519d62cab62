from stretchkit.annulus import SpiralPattern
from stretchkit.exceptions import InvalidArgumentsError
from stretchkit.surface.metric import covector_table, norm_report, stretch_vector, thurston_distance
from stretchkit.surface.torus import MARKOV333, Marking, Slope, TangentVec

from .base import BaseCommand
from .inputs import parse_pair, parse_surface


def sup_result(report, marking=None):
    "A truncated supremum as a JSON ready dict, argmax in the standard marking."
    argmax = report.argmax if marking is None else marking.from_local(report.argmax)
    return {
        'value': report.value,
        'argmax': str(argmax),
        'depth': report.depth,
        'increments': list(report.increments),
    }


class DistanceCommand(BaseCommand):
    command = 'distance'
    description = "Approximate Thurston's asymmetric distance between two structures."

    def add_options(self, parser):
        parser.add_argument(
            '--x',
            type=parse_surface,
            default=MARKOV333,
            help='the structure the distance is measured from (default: markov333)'
        )
        parser.add_argument(
            '--y',
            type=parse_surface,
            required=True,
            help='the structure the distance is measured to'
        )
        parser.add_argument(
            '--depth',
            type=int,
            help='Farey depth of the supremum (default: 7)'
        )

    def run(self, spec, x=MARKOV333, y=None):
        forward = thurston_distance(x, y, depth=spec.depth)
        backward = thurston_distance(y, x, depth=spec.depth)
        self.log("d(x, y) = {forward:.9f}, d(y, x) = {backward:.9f}".format(
            forward=forward.value, backward=backward.value,
        ))
        self.write_json(
            spec,
            {
                'distance': sup_result(forward),
                'reverse_distance': sup_result(backward),
            },
            x=list(x.traces),
            y=list(y.traces),
        )
        return forward


class NormCommand(BaseCommand):
    command = 'norm'
    description = 'Approximate the Thurston (Finsler) norm of a tangent vector.'

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
            help='the curve whose Fenchel-Nielsen chart the vector is written in (default: 0/1)'
        )
        vector = parser.add_mutually_exclusive_group(required=True)
        vector.add_argument(
            '--v',
            type=parse_pair,
            help='the vector as dl,dtau'
        )
        vector.add_argument(
            '--pattern',
            type=SpiralPattern.parse,
            help='use the stretch vector of this spiralling pattern'
        )
        parser.add_argument(
            '--depth',
            type=int,
            help='Farey depth of the supremum (default: 7)'
        )
        parser.add_argument(
            '--fd-step',
            dest='fd_step',
            type=float,
            help='base finite difference step (default: 1e-4)'
        )

    def run(self, spec, x=MARKOV333, slope=Slope(0, 1), v=None, pattern=None):
        marking = Marking.for_slope(slope)
        point = marking.chart_point(x)
        if pattern is not None:
            vector = stretch_vector(point, pattern)
        elif v is not None:
            vector = TangentVec(*v)
        else:
            raise InvalidArgumentsError(self.cmd_line.format(command=self.command), 'one of --v or --pattern is required')

        report = norm_report(covector_table(point, spec.depth, spec.fd_step), vector, spec.depth)
        self.log("|v| = {value:.9f} attained at {argmax}".format(
            value=report.value, argmax=marking.from_local(report.argmax),
        ))
        self.write_json(
            spec,
            {
                'norm': sup_result(report, marking),
                'vector': [vector.dlength, vector.dtwist],
                'chart': [point.length, point.twist],
            },
            x=list(x.traces),
            slope=str(slope),
            pattern=None if pattern is None else pattern.value,
        )
        return report
