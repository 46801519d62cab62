from stretchkit.exceptions import ValidationFlagError
from stretchkit.surface.experiments import length_extraction
from stretchkit.surface.torus import MARKOV333, Slope

from .base import BaseCommand
from .inputs import parse_surface

ACCEPTANCE = 0.03
TREND_WINDOW = 5

HEADER = [
    'm', 'slope', 'length', 'twist_norm', 'difference_norm',
    'ratio_estimate', 'increment_estimate', 'fitted_estimate',
]


def error_trend_decreasing(extraction, window=TREND_WINDOW, column='ratio_estimate'):
    "Whether an estimate approaches the target monotonically over the last ``window`` steps."
    values = [getattr(row, column) for row in extraction.rows[-window:]]
    if len(values) < window or None in values:
        return False
    errors = [abs(value - extraction.target) for value in values]
    return all(later <= earlier for earlier, later in zip(errors, errors[1:]))


class ExtractLengthCommand(BaseCommand):
    command = 'extract-length'
    description = 'Recover a curve length from stretch vectors of curves twisted around it.'

    def add_options(self, parser):
        parser.add_argument(
            '--x',
            type=parse_surface,
            default=MARKOV333,
            help='the structure (default: markov333)'
        )
        parser.add_argument(
            '--gamma',
            type=Slope.parse,
            default=Slope(0, 1),
            help='the curve whose length is recovered (default: 0/1)'
        )
        parser.add_argument(
            '--alpha0',
            type=Slope.parse,
            default=Slope(1, 0),
            help='the curve twisted around gamma (default: 1/0)'
        )
        parser.add_argument(
            '--m-max',
            dest='m_max',
            type=int,
            help='number of Dehn twists (default: 25)'
        )
        parser.add_argument(
            '--depth',
            type=int,
            help='Farey depth of the norm suprema (default: 7)'
        )
        parser.add_argument(
            '--fd-step',
            dest='fd_step',
            type=float,
            help='base finite difference step (default: 1e-4)'
        )

    def run(self, spec, x=MARKOV333, gamma=Slope(0, 1), alpha0=Slope(1, 0)):
        self.log("recovering the length of {gamma} by twisting {alpha0}".format(gamma=gamma, alpha0=alpha0))
        extraction = length_extraction(
            x, gamma, alpha0,
            m_max=spec.m_max,
            depth=spec.depth,
            fd_step=spec.fd_step,
        )
        for flag in extraction.flags:
            self.log(flag)
        rows = [
            [
                row.m, row.slope, row.length, row.twist_norm, row.difference_norm,
                row.ratio_estimate, row.increment_estimate, row.fitted_estimate,
            ]
            for row in extraction.rows
        ]
        self.write_csv(
            spec, HEADER, rows,
            gamma=gamma, alpha0=alpha0, target=extraction.target,
        )

        error = extraction.relative_error
        trend = error_trend_decreasing(extraction)
        self.log("target {target:.9f}, ratio {ratio}, fitted {fitted}".format(
            target=extraction.target, ratio=extraction.ratio, fitted=extraction.fitted,
        ))
        self.log("recovered {recovered}, relative error {error}".format(
            recovered=extraction.recovered, error=error,
        ))
        if error is None or error > ACCEPTANCE or not trend:
            raise ValidationFlagError(
                self.command,
                {
                    'target': extraction.target,
                    'recovered': extraction.recovered,
                    'relative_error': error,
                    'ratio_trend_decreasing': trend,
                },
            )
        return extraction
