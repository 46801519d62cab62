from stretchkit.annulus import (
    SLENDER_CASES,
    TwistWidthInput,
    classify_pants_case,
    twist_width,
    type_one_term
)
from stretchkit.exceptions import ConfigError, DomainError

from .base import BaseCommand
from .inputs import parse_pair, parse_real

DEFAULT_ALPHAS = (1.0, 2.0, 5.0, 10.0, 20.0, 30.0, 40.0)


def parse_cases(text):
    cases = [item.strip() for item in text.split(',') if item.strip()]
    if cases == ['all']:
        return sorted(SLENDER_CASES)
    return cases


def parse_alphas(text):
    return [parse_real(item) for item in text.split(',') if item.strip()]


def decay_table(cases, alphas):
    "One row per (case, α) with the width and the type one part of it."
    rows = []
    for case in cases:
        pants = SLENDER_CASES.get(case)
        if pants is None:
            raise DomainError('case', case, 'one of I, II, III, IV')
        for alpha in alphas:
            left = pants(alpha)
            width_input = TwistWidthInput(alpha=alpha, left=left, right=left)
            rows.append([
                case,
                alpha,
                left[0],
                left[1],
                classify_pants_case(alpha, *left),
                twist_width(width_input),
                4.0 * type_one_term(alpha),
            ])
    return rows


class TwistWidthCommand(BaseCommand):
    command = 'twist-width'
    description = 'Compute the twist width of a curve between two pairs of pants.'

    def add_options(self, parser):
        parser.add_argument(
            '--alpha',
            type=parse_real,
            help='length of the curve'
        )
        parser.add_argument(
            '--left',
            type=parse_pair,
            default=(1.0, 1.0),
            help='the other two boundary lengths of the left pants (default: 1,1)'
        )
        parser.add_argument(
            '--right',
            type=parse_pair,
            default=(1.0, 1.0),
            help='the other two boundary lengths of the right pants (default: 1,1)'
        )
        parser.add_argument(
            '--decay',
            type=parse_cases,
            help='write a decay table for these slender cases (I, II, III, IV or all)'
        )
        parser.add_argument(
            '--alphas',
            type=parse_alphas,
            default=list(DEFAULT_ALPHAS),
            help='curve lengths of the decay table'
        )

    def run(self, spec, alpha=None, left=(1.0, 1.0), right=(1.0, 1.0), decay=None, alphas=DEFAULT_ALPHAS):
        if decay is not None:
            rows = decay_table(decay, alphas)
            self.write_csv(
                spec,
                ['case', 'alpha', 'beta', 'gamma', 'regime', 'twist_width', 'core_term'],
                rows,
                cases=':'.join(decay),
            )
            return rows

        if alpha is None:
            raise ConfigError("twist-width needs --alpha, or --decay for a table")
        width_input = TwistWidthInput(alpha=alpha, left=tuple(left), right=tuple(right))
        width = twist_width(width_input)
        self.log("twist width at alpha={alpha}: {width!r}".format(alpha=alpha, width=width))
        self.write_json(
            spec,
            {
                'twist_width': width,
                'core_term': 4.0 * type_one_term(alpha),
                'regimes': [classify_pants_case(alpha, *left), classify_pants_case(alpha, *right)],
            },
            alpha=alpha,
            left=list(left),
            right=list(right),
        )
        return width
