"""
The Teichmüller space of the once-punctured torus.

A hyperbolic structure is a Fricke triple (a, b, c) of traces of the
generators A, B and their product AB, subject to the cusp relation
a² + b² + c² = abc. Simple closed curves are indexed by slopes p/q, with
homology vector (p, q): 0/1 is A, 1/0 is B and 1/1 is AB.

Traces are carried as *excesses* (trace - 2). Back-time flows shrink a
curve to lengths around 1e-11, whose trace would round to exactly 2.0; the
excess keeps full relative precision there. Excess arithmetic switches to
logarithms of traces once traces become too large for floats.
"""
import math
from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from stretchkit.exceptions import (
    DegenerateStructureError,
    DomainError,
    InvalidStructureError,
    SpecFormatError
)
from stretchkit.hyp_core import length_from_excess

# Beyond this excess, products of two excesses could overflow.
_EXCESS_LIMIT = 1e150
_LOG_EXCESS_LIMIT = math.log(_EXCESS_LIMIT)


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


@total_ordering
@dataclass(frozen=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if (p, q) == (0, 0):
            raise DomainError('slope', '0/0', 'a non-zero vector')
        if math.gcd(p, q) != 1:
            raise DomainError('slope', '{p}/{q}'.format(p=p, q=q), 'coprime p and q')
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    @classmethod
    def from_vector(cls, vector):
        return cls(*vector)

    @classmethod
    def parse(cls, text):
        try:
            p, q = text.strip().split('/')
            return cls(int(p), int(q))
        except ValueError:
            raise SpecFormatError(repr(text), "slopes are written p/q")

    @property
    def vector(self):
        return (self.p, self.q)

    def __lt__(self, other):
        return self.vector < other.vector

    def __str__(self):
        return '{self.p}/{self.q}'.format(self=self)


def intersection_number(first, second):
    return abs(_det(first.vector, second.vector))


def enumerate_slopes(depth):
    """
    All slopes reached within ``depth`` mediant steps of the Farey pairs
    (0/1, 1/0) and (-1/0, 0/1); 2^{depth+1} slopes, sorted.
    """
    if depth < 0:
        raise DomainError('depth', depth, 'depth >= 0')
    found = {Slope(0, 1), Slope(1, 0)}
    frontier = [((0, 1), (1, 0)), ((-1, 0), (0, 1))]
    for _ in range(depth):
        next_frontier = []
        for u, v in frontier:
            m = (u[0] + v[0], u[1] + v[1])
            found.add(Slope.from_vector(m))
            next_frontier.extend([(u, m), (m, v)])
        frontier = next_frontier
    return sorted(found)


@dataclass(frozen=True)
class TraceValue:
    """
    A trace larger than 2, as its excess (trace - 2) while that is safely
    representable, and always as the logarithm of the trace.
    """
    excess: float
    log_trace: float

    @classmethod
    def from_excess(cls, excess):
        if not excess > 0:
            raise InvalidStructureError("trace {trace!r} is not hyperbolic".format(trace=2.0 + excess))
        return cls(excess, math.log(2.0 + excess))

    @classmethod
    def from_log(cls, log_trace):
        if log_trace < _LOG_EXCESS_LIMIT:
            return cls.from_excess(math.exp(log_trace) - 2.0)
        return cls(math.inf, log_trace)

    @property
    def finite(self):
        return self.excess < _EXCESS_LIMIT

    @property
    def trace(self):
        return 2.0 + self.excess

    @property
    def length(self):
        if self.finite:
            return length_from_excess(self.excess)
        return 2.0 * self.log_trace

    def mediant(self, other, difference):
        """
        The trace of XY from X, Y and XY⁻¹, for a Farey pair X, Y.

        tr(XY) = tr(X)·tr(Y) - tr(XY⁻¹) keeps excess precision for short
        curves, but cancels when XY is much shorter than X and Y. The cusp
        relation also gives tr(XY)·tr(XY⁻¹) = tr(X)² + tr(Y)², which has no
        subtraction; it is used whenever the first form would lose more.
        """
        if self.finite and other.finite and difference.finite:
            product = 2.0 * self.excess + 2.0 * other.excess + self.excess * other.excess
            excess = product - difference.excess
            # Relative error in the excess: product/excess here, trace/excess below.
            if excess > 0 and product <= 2.0 + excess:
                return TraceValue.from_excess(excess)
            trace = (self.trace ** 2 + other.trace ** 2) / difference.trace
            return TraceValue.from_excess(trace - 2.0)
        log_trace = float(np.logaddexp(2.0 * self.log_trace, 2.0 * other.log_trace)) - difference.log_trace
        return TraceValue.from_log(log_trace)


@dataclass(frozen=True)
class FrickeTriple:
    """
    Traces (a, b, c) of A, B and AB, stored as excesses over 2.
    """
    excess_a: float
    excess_b: float
    excess_c: float

    def __post_init__(self):
        for name in ('excess_a', 'excess_b', 'excess_c'):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise InvalidStructureError(
                    "trace {trace!r} is not a valid hyperbolic trace".format(trace=2.0 + value)
                )

    @classmethod
    def from_traces(cls, a, b, c, tolerance=1e-10):
        triple = cls(a - 2.0, b - 2.0, c - 2.0)
        residual = cusp_relation_residual(triple)
        if abs(residual) > tolerance:
            raise InvalidStructureError(
                "({a}, {b}, {c}) violates the cusp relation (relative residual {residual:.3e})".format(
                    a=a, b=b, c=c, residual=residual,
                )
            )
        return triple

    @property
    def a(self):
        return 2.0 + self.excess_a

    @property
    def b(self):
        return 2.0 + self.excess_b

    @property
    def c(self):
        return 2.0 + self.excess_c

    @property
    def traces(self):
        return (self.a, self.b, self.c)

    def trace_values(self):
        return (
            TraceValue.from_excess(self.excess_a),
            TraceValue.from_excess(self.excess_b),
            TraceValue.from_excess(self.excess_c),
        )


def cusp_relation_residual(triple):
    "(a² + b² + c² - abc)/(abc); zero on Teichmüller space."
    a, b, c = triple.traces
    return (a * a + b * b + c * c - a * b * c) / (a * b * c)


@dataclass(frozen=True)
class ChartPoint:
    "Fenchel-Nielsen coordinates (ℓ, τ) of the distinguished curve of a marking."
    length: float
    twist: float = 0.0

    def __post_init__(self):
        if not self.length > 0:
            raise DomainError('length', self.length, 'length > 0')


@dataclass(frozen=True)
class TangentVec:
    dlength: float
    dtwist: float

    def __mul__(self, factor):
        return TangentVec(factor * self.dlength, factor * self.dtwist)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Covector:
    clength: float
    ctwist: float

    def __call__(self, vector):
        return self.clength * vector.dlength + self.ctwist * vector.dtwist


def fn_to_fricke(point):
    """
    The Fricke triple of a chart point.

    With A = diag(e^{ℓ/2}, e^{-ℓ/2}) and k = coth(ℓ/2), the second generator
    has diagonal k·e^{±(τ/2 - ℓ/4)} and off-diagonal entries 1/sinh(ℓ/2):

        a = 2cosh(ℓ/2)
        b = 2k·cosh((τ - ℓ/2)/2)
        c = 2k·cosh((τ + ℓ/2)/2)

    so τ = 0 is the symmetric locus b = c, and τ ↦ τ + ℓ is a full Dehn twist
    taking (a, b, c) to (a, c, ac - b).
    """
    length, twist = point.length, point.twist
    try:
        excesses = [4.0 * math.sinh(0.25 * length) ** 2]
        for offset in (-0.5 * length, 0.5 * length):
            x = 0.5 * (twist + offset)
            excesses.append(4.0 * math.cosh(x) / math.expm1(length) + 4.0 * math.sinh(0.5 * x) ** 2)
        return FrickeTriple(*excesses)
    except (OverflowError, ZeroDivisionError, InvalidStructureError) as e:
        raise DegenerateStructureError(
            "no Fricke triple for (ℓ={length!r}, τ={twist!r}): {e}".format(length=length, twist=twist, e=e)
        )


def fricke_to_fn(triple):
    "Inverse of fn_to_fricke."
    length = length_from_excess(triple.excess_a)
    h = 0.25 * length
    b, c = triple.b, triple.c
    numerator = c * math.exp(h) - b * math.exp(-h)
    denominator = b * math.exp(h) - c * math.exp(-h)
    if not (numerator > 0 and denominator > 0):
        raise InvalidStructureError("traces {traces} have no twist coordinate".format(traces=triple.traces))
    return ChartPoint(length=length, twist=math.log(numerator) - math.log(denominator))


def _descent_start(triple, vector):
    ta, tb, tc = triple.trace_values()
    if vector[0] > 0:
        # Between 0/1 and 1/0, with mediant 1/1.
        return (0, 1), (1, 0), (1, 1), ta, tb, tc
    # Between -1/0 and 0/1, with mediant -1/1 (trace ab - c).
    return (-1, 0), (0, 1), (-1, 1), tb, ta, ta.mediant(tb, tc)


def slope_trace(triple, slope):
    """
    The trace of a slope, found by descending the Stern-Brocot tree and
    applying the trace relation at every mediant (see ``TraceValue.mediant``).
    """
    ta, tb, _ = triple.trace_values()
    if slope.vector == (0, 1):
        return ta
    if slope.vector == (1, 0):
        return tb
    target = slope.vector
    u, v, m, tu, tv, tm = _descent_start(triple, target)
    while m != target:
        if _det(m, target) * _det(m, v) > 0:
            # target lies between m and v
            u, tu, tw = m, tm, tu
        else:
            v, tv, tw = m, tm, tv
        m = (u[0] + v[0], u[1] + v[1])
        tm = tu.mediant(tv, tw)
    return tm


def slope_trace_log(triple, slope):
    return slope_trace(triple, slope).log_trace


def slope_length(triple, slope):
    return slope_trace(triple, slope).length


def slope_length_table(triple, depth):
    """
    Lengths of every slope of ``enumerate_slopes(depth)``, computed in one
    walk of the Stern-Brocot tree.
    """
    ta, tb, tc = triple.trace_values()
    lengths = {Slope(0, 1): ta.length, Slope(1, 0): tb.length}
    frontier = [
        ((0, 1), (1, 0), ta, tb, None),
        ((-1, 0), (0, 1), tb, ta, None),
    ]
    for level in range(depth):
        next_frontier = []
        for u, v, tu, tv, tw in frontier:
            if tw is None:
                tm = tc if u == (0, 1) else ta.mediant(tb, tc)
            else:
                tm = tu.mediant(tv, tw)
            m = (u[0] + v[0], u[1] + v[1])
            lengths[Slope.from_vector(m)] = tm.length
            next_frontier.append((u, m, tu, tm, tv))
            next_frontier.append((m, v, tm, tv, tu))
        frontier = next_frontier
    return lengths


def twist_matrix(gamma):
    "The action of a left Dehn twist along γ on H₁: v ↦ v + det(v, γ)·γ."
    p, q = gamma.vector
    return ((1 + p * q, -p * p), (q * q, 1 - p * q))


def _matmul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _matrix_power(matrix, exponent):
    result = ((1, 0), (0, 1))
    while exponent:
        if exponent & 1:
            result = _matmul(result, matrix)
        matrix = _matmul(matrix, matrix)
        exponent >>= 1
    return result


def dehn_twist(slope, gamma, m):
    "The image of ``slope`` under ``m`` Dehn twists along ``gamma`` (negative m twists backwards)."
    matrix = twist_matrix(gamma)
    if m < 0:
        (a, b), (c, d) = matrix
        matrix = ((d, -b), (-c, a))
    (a, b), (c, d) = _matrix_power(matrix, abs(m))
    p, q = slope.vector
    return Slope(a * p + b * q, c * p + d * q)


# det((0, 1), (1, 0)): the orientation of the standard basis (A, B).
STANDARD_ORIENTATION = -1


@dataclass(frozen=True)
class Marking:
    """
    A basis (α, β) of H₁ with the orientation of (A, B); charts built on it
    measure the Fenchel-Nielsen coordinates of α, twisting against β.
    """
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        if _det(self.alpha, self.beta) != STANDARD_ORIENTATION:
            raise DomainError(
                'marking', (self.alpha, self.beta),
                'a basis with det(alpha, beta) = {o}'.format(o=STANDARD_ORIENTATION)
            )

    @classmethod
    def standard(cls):
        return cls((0, 1), (1, 0))

    @classmethod
    def for_slope(cls, slope, partner=None):
        """
        A marking whose distinguished curve is ``slope``. If ``partner``
        crosses it once, it is used as the second basis curve.
        """
        alpha = slope.vector
        if partner is not None and intersection_number(slope, partner) == 1:
            beta = partner.vector
        else:
            beta = _unimodular_partner(alpha)
        if _det(alpha, beta) != STANDARD_ORIENTATION:
            beta = (-beta[0], -beta[1])
        return cls(alpha, beta)

    @property
    def is_standard(self):
        return self.alpha == (0, 1) and self.beta == (1, 0)

    def to_local(self, slope):
        "Express a slope in the marking, where α is local 0/1 and β is local 1/0."
        # v = x·β + y·α
        v = slope.vector
        det = _det(self.beta, self.alpha)
        x = _det(v, self.alpha) // det
        y = _det(self.beta, v) // det
        return Slope(x, y)

    def from_local(self, slope):
        x, y = slope.vector
        return Slope(x * self.beta[0] + y * self.alpha[0], x * self.beta[1] + y * self.alpha[1])

    def local_triple(self, triple):
        "Traces of (α, β, α + β) at a structure given in the standard marking."
        if self.is_standard:
            return triple
        total = (self.alpha[0] + self.beta[0], self.alpha[1] + self.beta[1])
        values = [
            slope_trace(triple, Slope.from_vector(vector))
            for vector in (self.alpha, self.beta, total)
        ]
        if not all(value.finite for value in values):
            raise DegenerateStructureError("marking curves are too long to chart")
        return FrickeTriple(*(value.excess for value in values))

    def standard_triple(self, local):
        "Inverse of local_triple."
        if self.is_standard:
            return local
        standard = Marking.standard()
        values = [
            slope_trace(local, self.to_local(Slope.from_vector(vector)))
            for vector in (standard.alpha, standard.beta, (1, 1))
        ]
        if not all(value.finite for value in values):
            raise DegenerateStructureError("standard curves are too long to chart")
        return FrickeTriple(*(value.excess for value in values))

    def chart_point(self, triple):
        return fricke_to_fn(self.local_triple(triple))


def _unimodular_partner(vector):
    "Some β with det(vector, β) = ±1, by the extended Euclidean algorithm."
    p, q = vector
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    # old_s·p + old_t·q = ±1, so det((p, q), (-old_t, old_s)) = ±1
    return (-old_t, old_s)


MARKOV333 = FrickeTriple(1.0, 1.0, 1.0)

PRESETS = {
    'markov333': MARKOV333,
}
