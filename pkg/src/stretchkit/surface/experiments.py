"""
Numerical experiments on the punctured torus: running a stretch line
backwards, and recovering a curve length from stretch vectors of curves
twisted around it.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from stretchkit.annulus import (
    AnnulusMetric11,
    SpiralPattern,
    parse_sign,
    stretch11,
    stretch_vector_diff
)
from stretchkit.exceptions import DegenerateStructureError, DomainError, IntersectionError
from stretchkit.surface.metric import FlowTrace, covector_table, norm_report
from stretchkit.surface.torus import (
    ChartPoint,
    Marking,
    Slope,
    TangentVec,
    dehn_twist,
    fn_to_fricke,
    intersection_number,
    slope_length
)

# e^{-ℓ} underflows well before this, and so does the stretch vector difference.
LENGTH_LIMIT = 700.0


def closed_leaf_length_from_shears(shears, signs):
    "Σ εᵢ sᵢ: the length of a closed leaf from the signed shears of the spiralling leaves."
    if len(shears) != len(signs):
        raise DomainError(
            'signs', signs,
            'one sign per shear ({count} shears)'.format(count=len(shears))
        )
    return float(sum(parse_sign(sign) * shear for shear, sign in zip(shears, signs)))


def expected_twist_rate(pattern):
    "The limit of τ(-s)/s along the antistretch ray."
    if pattern is SpiralPattern.PARALLEL:
        return 0.0
    return -2.0 * pattern.sign


def raw_length_limit(crossings, pattern):
    "The limit of ℓ/(2s) for a curve crossing the spiralled curve ``crossings`` times."
    return crossings * (2.0 + abs(expected_twist_rate(pattern))) / 2.0


@dataclass
class BacktimeSummary:
    twist_rate: float
    twist_slope: float
    expected_twist_rate: float
    probes: dict = field(default_factory=dict)
    truncated: bool = False

    def as_dict(self):
        return {
            'twist_rate': self.twist_rate,
            'twist_slope': self.twist_slope,
            'expected_twist_rate': self.expected_twist_rate,
            'probes': self.probes,
            'truncated': self.truncated,
        }


def backtime_experiment(x, pattern, s_max, probes, slope=Slope(0, 1), steps=50):
    """
    Run the antistretch flow of the lamination spiralling onto ``slope``
    from the structure ``x`` (a Fricke triple) out to time -s_max.

    Per step the trace records the chart coordinates, the twist rate
    τ(-s)/s, and for each probe slope its length normalized by the crossing
    scale 2s + |τ(-s)| (which tends to the intersection number i with
    ``slope``) as well as the raw ratio ℓ/(2s). Each crossing of the collar
    costs 2s + |τ(-s)|, so the raw ratio tends to i·(2 + |ρ|)/2 where ρ is
    the twist rate: i for parallel spiralling, 2i for opposite spiralling.
    The summary compares the last increment of ℓ/2 per unit of s with that
    limit, which removes the O(1/s) lag of the ratios.

    Returns the FlowTrace and a BacktimeSummary. If a state can no longer be
    represented in floating point the run stops there and the summary is
    marked truncated.
    """
    if not s_max > 0:
        raise DomainError('s_max', s_max, 's_max > 0')
    if steps < 2:
        raise DomainError('steps', steps, 'steps >= 2')
    marking = Marking.for_slope(slope)
    start = marking.chart_point(x)
    local_probes = [(probe, marking.to_local(probe)) for probe in probes]

    trace = FlowTrace()
    truncated = False
    for s in np.linspace(s_max / steps, s_max, steps):
        s = float(s)
        flowed = stretch11(AnnulusMetric11(start.length, start.twist), pattern, -s)
        state = ChartPoint(length=flowed.length, twist=flowed.twist)
        scale = 2.0 * s + abs(state.twist)
        values = {'twist_rate': state.twist / s}
        try:
            triple = fn_to_fricke(state)
            for probe, local in local_probes:
                length = slope_length(triple, local)
                values['normalized:{probe}'.format(probe=probe)] = length / scale
                values['raw:{probe}'.format(probe=probe)] = length / (2.0 * s)
        except DegenerateStructureError:
            truncated = True
            trace.flags.append('truncated at s={s}'.format(s=s))
            break
        trace.append(-s, state, **values)

    if len(trace.times) < 2:
        raise DegenerateStructureError("the antistretch ray leaves floating point range immediately")
    summary = BacktimeSummary(
        twist_rate=trace.columns['twist_rate'][-1],
        # The O(1) offset of τ(-s) cancels in the last increment.
        twist_slope=(trace.states[-1].twist - trace.states[-2].twist) / (trace.times[-2] - trace.times[-1]),
        expected_twist_rate=expected_twist_rate(pattern),
        truncated=truncated,
    )
    s_last, s_before = -trace.times[-1], -trace.times[-2]
    for probe, _ in local_probes:
        crossings = intersection_number(probe, slope)
        raw = trace.columns['raw:{probe}'.format(probe=probe)]
        growth = (raw[-1] * s_last - raw[-2] * s_before) / (s_last - s_before)
        limit = raw_length_limit(crossings, pattern)
        summary.probes[str(probe)] = {
            'intersection': crossings,
            'normalized': trace.columns['normalized:{probe}'.format(probe=probe)][-1],
            'raw': raw[-1],
            'raw_limit': limit,
            'growth': growth,
            'relative_error': abs(growth - limit) / limit if limit else growth,
        }
    return trace, summary


@dataclass(frozen=True)
class ExtractionRow:
    m: int
    slope: Slope
    length: float
    twist_norm: float
    difference_norm: float
    ratio_estimate: float
    increment_estimate: float = None
    fitted_estimate: float = None


@dataclass
class LengthExtraction:
    gamma: Slope
    alpha0: Slope
    intersection: int
    target: float
    rows: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def _last(self, column):
        for row in reversed(self.rows):
            value = getattr(row, column)
            if value is not None:
                return value
        return None

    @property
    def ratio(self):
        "The last ratio estimate; its error decays only like log(m)/m."
        return self._last('ratio_estimate')

    @property
    def recovered(self):
        "The last increment estimate, whose error decays like 1/m."
        return self._last('increment_estimate')

    @property
    def fitted(self):
        return self._last('fitted_estimate')

    @property
    def relative_error(self):
        if self.recovered is None:
            return None
        return abs(self.recovered - self.target) / self.target


def fitted_length(ms, log_norms, crossings):
    """
    Fit -log‖·‖ ≈ i·L·m + B·log m + C by least squares and return L.

    The type one term and the norm of the unit twist both vary polynomially
    in m; the log m column absorbs them.
    """
    ms = np.asarray(ms, dtype=float)
    design = np.column_stack([crossings * ms, np.log(ms), np.ones_like(ms)])
    coefficients, *_ = np.linalg.lstsq(design, -np.asarray(log_norms, dtype=float), rcond=None)
    return float(coefficients[0])


def length_extraction(x, gamma, alpha0, m_max=25, depth=7, fd_step=1e-4, window=5):
    """
    Recover ℓ_x(γ) from the norms of stretch vector differences at the
    curves α_m, the images of α₀ under m Dehn twists along γ.

    ‖v₊ - v₋‖ at α_m is stretch_vector_diff(ℓ_x(α_m)) times the Finsler norm
    of the unit twist along α_m, and -log of it grows like
    i(γ, α₀)·m·ℓ_x(γ) + B·log m + C.

    Each row carries three estimates of ℓ_x(γ): the ratio -log‖·‖/(i·m),
    off by (B·log m + C)/m; the increment between consecutive m, off by
    about B/m; and a least squares fit of the form above over the last
    ``window`` rows.
    """
    crossings = intersection_number(gamma, alpha0)
    if crossings == 0:
        raise IntersectionError(gamma, alpha0)
    if m_max < 1:
        raise DomainError('m_max', m_max, 'm_max >= 1')

    result = LengthExtraction(
        gamma=gamma,
        alpha0=alpha0,
        intersection=crossings,
        target=slope_length(x, gamma),
    )
    unit_twist = TangentVec(0.0, 1.0)
    ms, log_norms = [], []
    for m in range(1, m_max + 1):
        alpha = dehn_twist(alpha0, gamma, m)
        length = slope_length(x, alpha)
        if length > LENGTH_LIMIT:
            result.flags.append('stopped at m={m}: ℓ(α_m) = {length:.1f} underflows'.format(m=m, length=length))
            break
        marking = Marking.for_slope(alpha, partner=gamma)
        point = marking.chart_point(x)
        twist_norm = norm_report(covector_table(point, depth, fd_step), unit_twist, depth).value
        difference = stretch_vector_diff(length) * twist_norm
        if not difference > 0:
            result.flags.append('stopped at m={m}: non-positive difference norm'.format(m=m))
            break
        log_norm = math.log(difference)

        increment = None
        if log_norms:
            increment = (log_norms[-1] - log_norm) / crossings
        ms.append(m)
        log_norms.append(log_norm)
        fitted = None
        if len(ms) >= window:
            fitted = fitted_length(ms[-window:], log_norms[-window:], crossings)

        result.rows.append(ExtractionRow(
            m=m,
            slope=alpha,
            length=length,
            twist_norm=twist_norm,
            difference_norm=difference,
            ratio_estimate=-log_norm / (crossings * m),
            increment_estimate=increment,
            fitted_estimate=fitted,
        ))
    return result
