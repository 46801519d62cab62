import numpy as np

from stretchkit.annulus import SpiralPattern, parse_sign, stretch_crowned
from stretchkit.exceptions import ConfigError, InvalidArgumentsError, ValidationFlagError
from stretchkit.surface.metric import stretch_flow, stretch_trajectory
from stretchkit.surface.torus import Marking, Slope

from .base import BaseCommand
from .inputs import parse_annulus, parse_real, parse_slopes, parse_surface


def time_grid(t, steps):
    "Times 0 = t₀, …, t_steps = t; just [0] when t is 0."
    if t == 0:
        return [0.0]
    return [float(s) for s in np.linspace(0.0, t, steps + 1)]


class StretchCommand(BaseCommand):
    command = 'stretch'
    description = 'Flow a crowned annulus, or a punctured torus, along a stretch line.'

    def add_options(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument(
            '--annulus',
            type=parse_annulus,
            help='a crowned annulus: l=<length>,tau=<twist>[,sL=a:b,sR=c]'
        )
        source.add_argument(
            '--x',
            type=parse_surface,
            help='a punctured torus: preset, a,b,c, l=<length>,tau=<twist> or a JSON file'
        )
        parser.add_argument(
            '--pattern',
            type=SpiralPattern.parse,
            default=SpiralPattern.OPPOSITE_PLUS,
            help='spiralling pattern: parallel, opposite+ or opposite- (default: opposite+)'
        )
        parser.add_argument(
            '--sign',
            type=parse_sign,
            default=1,
            help='twist direction for parallel spiralling of crowned annuli (+ or -)'
        )
        parser.add_argument(
            '--t',
            dest='t',
            type=parse_real,
            help='flow time; negative times run the antistretch flow (ln<x> accepted; write --t=-ln<x>)'
        )
        parser.add_argument(
            '--steps',
            type=int,
            default=10,
            help='number of time steps written (default: 10)'
        )
        parser.add_argument(
            '--slope',
            type=Slope.parse,
            default=Slope(0, 1),
            help='the curve the lamination spirals onto (surface mode; default: 0/1)'
        )
        parser.add_argument(
            '--probes',
            type=parse_slopes,
            default=[],
            help='comma separated slopes whose lengths are recorded (surface mode)'
        )
        parser.add_argument(
            '--depth',
            type=int,
            help='Farey depth of the validation supremum (surface mode; default: 7)'
        )

    def run(self, spec, annulus=None, x=None, pattern=SpiralPattern.OPPOSITE_PLUS, sign=1,
            steps=10, slope=Slope(0, 1), probes=()):
        if spec.t is None:
            raise ConfigError("no flow time given (use --t or set t in [tool.stretchkit.stretch])")
        if steps < 1:
            raise InvalidArgumentsError(self.cmd_line.format(command=self.command), 'steps must be >= 1')
        times = time_grid(spec.t, steps)
        if annulus is not None:
            return self.run_annulus(spec, annulus, pattern, sign, times)
        return self.run_surface(spec, x, pattern, slope, probes, times)

    def run_annulus(self, spec, annulus, pattern, sign, times):
        self.log(
            "flowing an ({n_left},{n_right})-crowned annulus along {pattern} to t={t}".format(
                n_left=annulus.n_left, n_right=annulus.n_right, pattern=pattern.value, t=spec.t,
            )
        )
        header = ['t', 'length', 'twist']
        header += ['left_shear_{i}'.format(i=i + 1) for i in range(len(annulus.left_shears))]
        header += ['right_shear_{i}'.format(i=i + 1) for i in range(len(annulus.right_shears))]
        rows = []
        for time in times:
            flowed = stretch_crowned(annulus, pattern, time, sign=sign)
            rows.append([time, flowed.length, flowed.twist] + list(flowed.left_shears) + list(flowed.right_shears))
        self.write_csv(
            spec, header, rows,
            mode='annulus', pattern=pattern.value, sign=sign,
            length=annulus.length, twist=annulus.twist,
        )

    def run_surface(self, spec, x, pattern, slope, probes, times):
        marking = Marking.for_slope(slope)
        point = marking.chart_point(x)
        self.log(
            "flowing (l={point.length:.6f}, tau={point.twist:.6f}) in the chart of {slope} along {pattern}".format(
                point=point, slope=slope, pattern=pattern.value,
            )
        )
        trace = stretch_trajectory(point, pattern, times, slope=slope, probes=probes)
        step = stretch_flow(point, pattern, spec.t, slope=slope, depth=spec.depth)
        report = step.report.as_dict()
        self.log("validation: {report}".format(report=report))
        self.write_csv(
            spec, trace.header, trace.rows(),
            mode='surface', pattern=pattern.value, slope=slope,
            a=x.a, b=x.b, c=x.c,
        )
        if step.report.flagged:
            raise ValidationFlagError(self.command, report)
        return step
