"""
Stretch and antistretch flows on crowned annuli.

A (1,1)-crowned annulus is described by Fenchel-Nielsen coordinates
(ℓ, τ) of its core geodesic; a general (n_L, n_R)-crowned annulus adds the
interior shears of the ideal triangulations of its two crowns. The
spiralling shears of each crown sum to ℓ, so only the interior ones are
stored.
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import logsumexp

from stretchkit.exceptions import DomainError
from stretchkit.hyp_core import log1mexp, shear_partial_sums


class SpiralPattern(Enum):
    PARALLEL = 'parallel'
    OPPOSITE_PLUS = 'opposite+'
    OPPOSITE_MINUS = 'opposite-'

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise DomainError(
                'pattern', text,
                'one of ' + ', '.join(p.value for p in cls)
            )

    @property
    def sign(self):
        return -1 if self is SpiralPattern.OPPOSITE_MINUS else 1

    @property
    def is_opposite(self):
        return self is not SpiralPattern.PARALLEL


def parse_sign(text):
    "Convert '+'/'-' (or +1/-1) into an integer sign."
    if text in ('+', '+1', 1):
        return 1
    if text in ('-', '-1', -1):
        return -1
    raise DomainError('sign', text, "'+' or '-'")


def _require_length(length):
    if not length > 0:
        raise DomainError('length', length, 'length > 0')


@dataclass(frozen=True)
class AnnulusMetric11:
    length: float
    twist: float = 0.0

    def __post_init__(self):
        _require_length(self.length)


@dataclass(frozen=True)
class CrownedAnnulusMetric:
    length: float
    twist: float = 0.0
    left_shears: tuple = ()
    right_shears: tuple = ()

    def __post_init__(self):
        _require_length(self.length)
        object.__setattr__(self, 'left_shears', tuple(float(s) for s in self.left_shears))
        object.__setattr__(self, 'right_shears', tuple(float(s) for s in self.right_shears))

    @classmethod
    def from_annulus11(cls, metric):
        return cls(length=metric.length, twist=metric.twist)

    @property
    def n_left(self):
        return len(self.left_shears) + 1

    @property
    def n_right(self):
        return len(self.right_shears) + 1

    @property
    def left_determined_shear(self):
        return determined_shear(self.left_shears, self.length)

    @property
    def right_determined_shear(self):
        return determined_shear(self.right_shears, self.length)


def determined_shear(shears, length):
    "The shear fixed by the constraint that a crown's spiralling shears sum to ℓ."
    return length - sum(shears)


def spiral_log_sum(shears, scale=1.0):
    "log(1 + Σ_k e^{-scale·(s₁+…+s_k)}) over the partial sums of the interior shears."
    exponents = [0.0] + [-scale * p for p in shear_partial_sums(shears)]
    return float(logsumexp(exponents))


def spiral_entropy(partials):
    """
    log(1 + Σ e^{-p}) + Σ p·e^{-p} / (1 + Σ e^{-p}) over the given partial sums.

    This is the entropy of the distribution proportional to e^{-p} over
    (0, p₁, p₂, ...), so it is unchanged when every exponent is shifted by
    the same amount. Shifting by the smallest exponent keeps all arguments
    of the exponentials non-positive.
    """
    exponents = np.concatenate(([0.0], np.asarray(partials, dtype=float)))
    shifted = exponents - exponents.min()
    weights = np.exp(-shifted)
    lead = int(np.argmin(shifted))
    rest = np.delete(weights, lead).sum()
    return float(math.log1p(rest) + np.dot(shifted, weights) / (1.0 + rest))


def opposite_correction(length, t):
    "2(log(1 - e^{-e^t ℓ}) - e^t log(1 - e^{-ℓ})), the twist drift of opposite spiralling."
    k = math.exp(t)
    return 2.0 * (log1mexp(k * length) - k * log1mexp(length))


def _crown_drift(shears, t):
    k = math.exp(t)
    return k * spiral_log_sum(shears) - spiral_log_sum(shears, scale=k)


def stretch11(metric, pattern, t):
    """
    Flow a (1,1)-crowned annulus for time ``t`` along the given spiralling
    pattern; negative ``t`` is the antistretch.
    """
    if pattern.is_opposite:
        crowned = stretch_opposite(CrownedAnnulusMetric.from_annulus11(metric), pattern.sign, t)
        return AnnulusMetric11(length=crowned.length, twist=crowned.twist)
    k = math.exp(t)
    return AnnulusMetric11(length=k * metric.length, twist=k * metric.twist)


def _scaled(metric, t, twist):
    k = math.exp(t)
    return CrownedAnnulusMetric(
        length=k * metric.length,
        twist=twist,
        left_shears=tuple(k * s for s in metric.left_shears),
        right_shears=tuple(k * s for s in metric.right_shears),
    )


def stretch_parallel(metric, sign, t):
    sign = parse_sign(sign)
    k = math.exp(t)
    drift = _crown_drift(metric.left_shears, t) - _crown_drift(metric.right_shears, t)
    return _scaled(metric, t, k * metric.twist + sign * drift)


def stretch_opposite(metric, sign, t):
    sign = parse_sign(sign)
    k = math.exp(t)
    drift = (
        opposite_correction(metric.length, t)
        + _crown_drift(metric.left_shears, t)
        + _crown_drift(metric.right_shears, t)
    )
    return _scaled(metric, t, k * metric.twist + sign * drift)


def stretch_crowned(metric, pattern, t, sign=1):
    "Dispatch a crowned annulus flow; ``sign`` only applies to parallel spiralling."
    if pattern.is_opposite:
        return stretch_opposite(metric, pattern.sign, t)
    return stretch_parallel(metric, sign, t)


def type_one_term(length):
    "ℓe^{-ℓ}/(1 - e^{-ℓ}) - log(1 - e^{-ℓ})"
    _require_length(length)
    return length * math.exp(-length) / -math.expm1(-length) - log1mexp(length)


def type_two_term(u, v, w):
    return spiral_entropy((u, v, w))


def stretch_vector11(metric, pattern):
    if pattern.is_opposite:
        return metric.length, metric.twist + pattern.sign * 2.0 * type_one_term(metric.length)
    return metric.length, metric.twist


def stretch_vector_crowned(metric, pattern, sign=1):
    """
    The t-derivative at 0 of a crowned annulus flow, as
    (dℓ, dτ, d(left shears), d(right shears)).
    """
    left = spiral_entropy(shear_partial_sums(metric.left_shears)) if metric.left_shears else 0.0
    right = spiral_entropy(shear_partial_sums(metric.right_shears)) if metric.right_shears else 0.0
    if pattern.is_opposite:
        dtwist = metric.twist + pattern.sign * (2.0 * type_one_term(metric.length) + left + right)
    else:
        dtwist = metric.twist + parse_sign(sign) * (left - right)
    return metric.length, dtwist, metric.left_shears, metric.right_shears


def stretch_vector_diff(length):
    "The τ-coefficient of the difference of the two opposite spiralling stretch vectors."
    return 4.0 * type_one_term(length)


def asymptotic_coeff(length):
    return 4.0 * length * math.exp(-length)


@dataclass(frozen=True)
class TwistWidthInput:
    alpha: float
    left: tuple = (1.0, 1.0)
    right: tuple = (1.0, 1.0)

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError('alpha', self.alpha, 'alpha > 0')
        for side in (self.left, self.right):
            if len(side) != 2 or any(value < 0 for value in side):
                raise DomainError('pants lengths', side, 'two lengths >= 0')


def _plus_shears(alpha, beta, gamma):
    seam = 0.5 * (alpha - beta - gamma)
    return (seam, gamma, seam)


def _minus_shears(alpha, beta, gamma):
    seam = 0.5 * (alpha + beta + gamma)
    return (seam, -beta, seam)


def twist_width_laminations(width_input):
    """
    The pair of (4,4)-crowned annuli cut out of the two pairs of pants by
    the laminations Λ₊ and Λ₋ whose stretch vectors bound the twist width.
    """
    plus = CrownedAnnulusMetric(
        length=width_input.alpha,
        left_shears=_plus_shears(width_input.alpha, *width_input.left),
        right_shears=_plus_shears(width_input.alpha, *width_input.right),
    )
    minus = CrownedAnnulusMetric(
        length=width_input.alpha,
        left_shears=_minus_shears(width_input.alpha, *width_input.left),
        right_shears=_minus_shears(width_input.alpha, *width_input.right),
    )
    return plus, minus


def twist_width(width_input):
    """
    (v_{Λ₊} - v_{Λ₋})(τ_α): four type one terms of the core plus one type two
    term per pair of pants and lamination.
    """
    plus, minus = twist_width_laminations(width_input)
    width = 4.0 * type_one_term(width_input.alpha)
    for metric in (plus, minus):
        for shears in (metric.left_shears, metric.right_shears):
            width += spiral_entropy(shear_partial_sums(shears))
    return width


def classify_pants_case(alpha, beta, gamma):
    "Which of the four slender regimes (I-IV) a pants triple falls in."
    if alpha > beta + gamma:
        return 'I'
    if beta > alpha + gamma:
        return 'II'
    if gamma > alpha + beta:
        return 'III'
    return 'IV'


SLENDER_CASES = {
    'I': lambda alpha: (1.0, 1.0),
    'II': lambda alpha: (3.0 * alpha, 1.0),
    'III': lambda alpha: (1.0, 3.0 * alpha),
    'IV': lambda alpha: (alpha, alpha),
}


def slender_sequence(case, alphas):
    "Pants sequences becoming slender as α grows, one per regime."
    try:
        pants = SLENDER_CASES[case]
    except KeyError:
        raise DomainError('case', case, 'one of I, II, III, IV')
    return [
        TwistWidthInput(alpha=alpha, left=pants(alpha), right=pants(alpha))
        for alpha in alphas
    ]
