import json

from stretchkit.annulus import SpiralPattern
from stretchkit.exceptions import ValidationFlagError
from stretchkit.surface.experiments import backtime_experiment
from stretchkit.surface.torus import MARKOV333, Slope

from .base import BaseCommand
from .inputs import parse_slopes, parse_surface

PROBE_TOLERANCE = 0.02
TWIST_TOLERANCE = 0.01


class BacktimeCommand(BaseCommand):
    command = 'backtime'
    description = 'Run a stretch line backwards and watch curve lengths projectivize.'

    def add_options(self, parser):
        parser.add_argument(
            '--x',
            type=parse_surface,
            default=MARKOV333,
            help='starting structure (default: markov333)'
        )
        parser.add_argument(
            '--pattern',
            type=SpiralPattern.parse,
            default=SpiralPattern.OPPOSITE_PLUS,
            help='spiralling pattern (default: opposite+)'
        )
        parser.add_argument(
            '--slope',
            type=Slope.parse,
            default=Slope(0, 1),
            help='the curve the lamination spirals onto (default: 0/1)'
        )
        parser.add_argument(
            '--smax',
            dest='s_max',
            type=float,
            help='how far back to run (default: 25)'
        )
        parser.add_argument(
            '--probes',
            type=parse_slopes,
            default=parse_slopes('1/0,1/1,2/1'),
            help='comma separated probe slopes (default: 1/0,1/1,2/1)'
        )
        parser.add_argument(
            '--steps',
            type=int,
            default=50,
            help='number of rows written (default: 50)'
        )
        parser.add_argument(
            '--summary',
            help='also write the convergence summary as JSON to this file'
        )

    def check(self, summary):
        "Problems with a convergence summary, as human readable strings."
        problems = []
        if summary.truncated:
            problems.append('the run was truncated')
        if abs(summary.twist_slope - summary.expected_twist_rate) > TWIST_TOLERANCE:
            problems.append('twist rate {rate:.4f} is not {expected}'.format(
                rate=summary.twist_slope, expected=summary.expected_twist_rate,
            ))
        for probe, entry in summary.probes.items():
            if entry['intersection'] and entry['relative_error'] > PROBE_TOLERANCE:
                problems.append('{probe}: length grows at {value:.4f} per 2s, not {limit}'.format(
                    probe=probe, value=entry['growth'], limit=entry['raw_limit'],
                ))
        return problems

    def run(self, spec, x=MARKOV333, pattern=SpiralPattern.OPPOSITE_PLUS, slope=Slope(0, 1),
            probes=(), steps=50, summary=None):
        self.log("running {pattern} backwards from {slope} to s={s_max}".format(
            pattern=pattern.value, slope=slope, s_max=spec.s_max,
        ))
        trace, result = backtime_experiment(x, pattern, spec.s_max, probes, slope=slope, steps=steps)
        self.write_csv(
            spec, trace.header, trace.rows(),
            pattern=pattern.value, slope=slope, steps=steps,
            probes=':'.join(str(p) for p in probes),
        )
        for probe, entry in sorted(result.probes.items()):
            self.log(
                "{probe}: i={entry[intersection]} normalized={entry[normalized]:.6f} growth={entry[growth]:.6f}".format(
                    probe=probe, entry=entry,
                )
            )
        self.log("twist rate {rate:.6f}, last increment {slope:.6f}".format(
            rate=result.twist_rate, slope=result.twist_slope,
        ))
        if summary is not None:
            with open(self.base_path / summary, 'w', encoding='utf-8') as f:
                json.dump(result.as_dict(), f, sort_keys=True, indent=2)
                f.write('\n')

        problems = self.check(result)
        if problems:
            raise ValidationFlagError(self.command, '; '.join(problems))
        return result
