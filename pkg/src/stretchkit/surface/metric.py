"""
Thurston's asymmetric metric and Finsler norm on the punctured torus,
approximated by suprema over slopes of bounded Farey depth.
"""
import math
from dataclasses import dataclass, field

from stretchkit.annulus import AnnulusMetric11, stretch11, stretch_vector11
from stretchkit.exceptions import DomainError
from stretchkit.surface.torus import (
    ChartPoint,
    Covector,
    Marking,
    Slope,
    TangentVec,
    cusp_relation_residual,
    enumerate_slopes,
    fn_to_fricke,
    slope_length,
    slope_length_table
)

FLAG_TOLERANCE = 1e-2
FD_STEP_RANGE = (1e-7, 1e-2)


@dataclass(frozen=True)
class SupReport:
    """
    A supremum truncated at Farey depth ``depth``.

    ``increments`` holds (sup_d - sup_{d-1}, sup_{d-1} - sup_{d-2}); small
    increments indicate the truncation has stabilized.
    """
    value: float
    argmax: Slope
    depth: int
    increments: tuple = ()


def truncated_sup(values, depth):
    """
    The maximum of a slope-indexed table over ``enumerate_slopes(depth)``,
    ties going to the smallest slope.
    """
    def best(slopes):
        top, argmax = -math.inf, None
        for slope in slopes:
            if values[slope] > top:
                top, argmax = values[slope], slope
        return top, argmax

    value, argmax = best(enumerate_slopes(depth))
    increments = ()
    if depth >= 2:
        previous = best(enumerate_slopes(depth - 1))[0]
        earlier = best(enumerate_slopes(depth - 2))[0]
        increments = (value - previous, previous - earlier)
    return SupReport(value=value, argmax=argmax, depth=depth, increments=increments)


def thurston_distance(x, y, depth=7):
    "sup over slopes of log(ℓ_y/ℓ_x), for Fricke triples x and y."
    if depth < 2:
        raise DomainError('depth', depth, 'depth >= 2')
    before = slope_length_table(x, depth)
    after = slope_length_table(y, depth)
    ratios = {slope: math.log(after[slope] / before[slope]) for slope in before}
    return truncated_sup(ratios, depth)


def _check_fd_step(fd_step):
    low, high = FD_STEP_RANGE
    if not low <= fd_step <= high:
        raise DomainError('fd_step', fd_step, '{low} <= fd_step <= {high}'.format(low=low, high=high))


def _steps(point, fd_step):
    # The length step is relative, so that short curves stay positive.
    return fd_step * point.length, fd_step


def _richardson(plus, minus, plus_half, minus_half, h):
    coarse = (plus - minus) / (2.0 * h)
    fine = (plus_half - minus_half) / h
    return (4.0 * fine - coarse) / 3.0


def _offsets(point, dlength, dtwist):
    return ChartPoint(length=point.length + dlength, twist=point.twist + dtwist)


def covector_sample(point, slope, fd_step=1e-4):
    "The gradient of log ℓ_slope in the chart, at ``point``."
    _check_fd_step(fd_step)
    hl, ht = _steps(point, fd_step)

    def log_length(dlength, dtwist):
        return math.log(slope_length(fn_to_fricke(_offsets(point, dlength, dtwist)), slope))

    return Covector(
        clength=_richardson(
            log_length(hl, 0.0), log_length(-hl, 0.0),
            log_length(0.5 * hl, 0.0), log_length(-0.5 * hl, 0.0),
            hl,
        ),
        ctwist=_richardson(
            log_length(0.0, ht), log_length(0.0, -ht),
            log_length(0.0, 0.5 * ht), log_length(0.0, -0.5 * ht),
            ht,
        ),
    )


def covector_table(point, depth=7, fd_step=1e-4):
    """
    Covectors d log ℓ_s for every slope s of ``enumerate_slopes(depth)``,
    with slopes read in the chart's own marking.
    """
    _check_fd_step(fd_step)
    hl, ht = _steps(point, fd_step)

    def logs(dlength, dtwist):
        table = slope_length_table(fn_to_fricke(_offsets(point, dlength, dtwist)), depth)
        return {slope: math.log(length) for slope, length in table.items()}

    length_samples = [logs(hl, 0.0), logs(-hl, 0.0), logs(0.5 * hl, 0.0), logs(-0.5 * hl, 0.0)]
    twist_samples = [logs(0.0, ht), logs(0.0, -ht), logs(0.0, 0.5 * ht), logs(0.0, -0.5 * ht)]
    return {
        slope: Covector(
            clength=_richardson(*(sample[slope] for sample in length_samples), hl),
            ctwist=_richardson(*(sample[slope] for sample in twist_samples), ht),
        )
        for slope in enumerate_slopes(depth)
    }


def norm_report(table, vector, depth):
    return truncated_sup({slope: covector(vector) for slope, covector in table.items()}, depth)


def finsler_norm(point, vector, depth=7, fd_step=1e-4):
    "The Finsler norm of a tangent vector: the largest d log ℓ_s(v) over enumerated slopes."
    return norm_report(covector_table(point, depth, fd_step), vector, depth).value


def stretch_vector(point, pattern):
    "The t-derivative at 0 of the flow in the chart, as a tangent vector."
    return TangentVec(*stretch_vector11(AnnulusMetric11(point.length, point.twist), pattern))


@dataclass(frozen=True)
class ValidationReport:
    """
    The largest log length ratio between the two ends of a flow segment,
    compared with the elapsed time.
    """
    sup: float
    argmax: Slope
    expected: float
    increments: tuple = ()

    @property
    def deviation(self):
        return abs(self.sup - self.expected)

    @property
    def flagged(self):
        return self.deviation > FLAG_TOLERANCE

    def as_dict(self):
        return {
            'sup': self.sup,
            'argmax': str(self.argmax),
            'expected': self.expected,
            'deviation': self.deviation,
            'flagged': self.flagged,
        }


@dataclass(frozen=True)
class FlowStep:
    point: ChartPoint
    triple: object
    report: ValidationReport


def stretch_flow(point, pattern, t, slope=Slope(0, 1), depth=7):
    """
    Flow a chart point of ``slope`` along the stretch line of the complete
    lamination that spirals onto ``slope`` with the given pattern.

    The chart coordinates follow the crowned annulus law. The result carries
    a validation report: the largest log length ratio over enumerated slopes
    should equal |t|, attained at ``slope``; anything else means the law does
    not describe a stretch line at this point.
    """
    marking = Marking.for_slope(slope)
    flowed = stretch11(AnnulusMetric11(point.length, point.twist), pattern, t)
    result = ChartPoint(length=flowed.length, twist=flowed.twist)

    before = slope_length_table(fn_to_fricke(point), depth)
    after = slope_length_table(fn_to_fricke(result), depth)
    start, end = (before, after) if t >= 0 else (after, before)
    ratios = {local: math.log(end[local] / start[local]) for local in before}
    sup = truncated_sup(ratios, depth)
    report = ValidationReport(
        sup=sup.value,
        argmax=marking.from_local(sup.argmax),
        expected=abs(t),
        increments=sup.increments,
    )
    return FlowStep(
        point=result,
        triple=marking.standard_triple(fn_to_fricke(result)),
        report=report,
    )


@dataclass
class FlowTrace:
    """
    Chart states along a flow, one per time, plus named per-time columns.
    """
    times: list = field(default_factory=list)
    states: list = field(default_factory=list)
    columns: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)

    def append(self, time, state, **values):
        if self.times and not _monotone(self.times[-1], time, self._direction):
            raise DomainError('times', time, 'strictly monotone times')
        self.times.append(time)
        self.states.append(state)
        for name, value in values.items():
            self.columns.setdefault(name, []).append(value)

    @property
    def _direction(self):
        if len(self.times) < 2:
            return 0
        return 1 if self.times[1] > self.times[0] else -1

    def rows(self):
        names = list(self.columns)
        for index, (time, state) in enumerate(zip(self.times, self.states)):
            yield [time, state.length, state.twist] + [self.columns[name][index] for name in names]

    @property
    def header(self):
        return ['t', 'length', 'twist'] + list(self.columns)


def _monotone(previous, current, direction):
    if direction > 0:
        return current > previous
    if direction < 0:
        return current < previous
    return current != previous


def stretch_trajectory(point, pattern, times, slope=Slope(0, 1), probes=()):
    """
    Sample the flow of ``point`` at each of ``times``, recording probe slope
    lengths (in the standard marking) and the cusp relation residual.
    """
    marking = Marking.for_slope(slope)
    trace = FlowTrace()
    for time in times:
        flowed = stretch11(AnnulusMetric11(point.length, point.twist), pattern, time)
        state = ChartPoint(length=flowed.length, twist=flowed.twist)
        local = fn_to_fricke(state)
        values = {
            'residual': cusp_relation_residual(local),
        }
        for probe in probes:
            values['length:{probe}'.format(probe=probe)] = slope_length(local, marking.to_local(probe))
        trace.append(time, state, **values)
    return trace
