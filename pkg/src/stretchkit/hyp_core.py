"""
Hyperbolic plane numerics shared by the annulus and surface models.

Everything here is a pure function of floats (or of immutable ``Isom2``
values); closed forms are used wherever they exist, and the series and
matrix products they summarize are kept alongside as oracles.
"""
import math
from dataclasses import dataclass

import numpy as np

from stretchkit.exceptions import DegenerateStructureError, DomainError, NonHyperbolicError

LN2 = math.log(2.0)
# Beyond this many terms the spiral series is replaced by its closed form.
MAX_SERIES_TERMS = 100_000


def log1mexp(x):
    """
    Compute log(1 - e^{-x}) for x > 0 without cancellation.

    Uses log(-expm1(-x)) for small x and log1p(-e^{-x}) otherwise.
    """
    if x <= 0:
        raise DomainError('x', x, 'x > 0')
    if x <= LN2:
        return math.log(-math.expm1(-x))
    return math.log1p(-math.exp(-x))


def _require_positive(name, value):
    if not value > 0:
        raise DomainError(name, value, '{name} > 0'.format(name=name))


def length_from_excess(excess):
    """
    Convert a trace excess (|tr| - 2) into a translation length.

    2·arcosh(1 + e/2) written as 2·log1p(x + sqrt(x(2 + x))) with x = e/2,
    which keeps full relative precision as the excess goes to 0.
    """
    if not excess > 0:
        raise NonHyperbolicError(2.0 + excess)
    x = 0.5 * excess
    if x >= 1.0:
        return 2.0 * math.acosh(1.0 + x)
    return 2.0 * math.log1p(x + math.sqrt(x * (2.0 + x)))


def trace_to_length(tr):
    "The translation length of a hyperbolic element with trace ``tr``."
    if not abs(tr) > 2.0:
        raise NonHyperbolicError(tr)
    return length_from_excess(abs(tr) - 2.0)


def length_to_trace(length):
    return 2.0 * math.cosh(0.5 * length)


@dataclass(frozen=True)
class Isom2:
    """
    An orientation preserving isometry of the hyperbolic plane, as a
    unimodular 2x2 matrix ``[[a, b], [c, d]]``.

    Entries are rescaled to unit determinant, and the overall sign is chosen
    so that the trace is non-negative.
    """
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not det > 0:
            raise DegenerateStructureError("matrix with determinant {det!r}".format(det=det))
        scale = 1.0 / math.sqrt(det)
        if self.a + self.d < 0:
            scale = -scale
        object.__setattr__(self, 'a', self.a * scale)
        object.__setattr__(self, 'b', self.b * scale)
        object.__setattr__(self, 'c', self.c * scale)
        object.__setattr__(self, 'd', self.d * scale)

    @classmethod
    def from_array(cls, array):
        return cls(array[0, 0], array[0, 1], array[1, 0], array[1, 1])

    def as_array(self):
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other):
        return Isom2.from_array(self.as_array() @ other.as_array())

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def inverse(self):
        return Isom2(self.d, -self.b, -self.c, self.a)

    def apply(self, z):
        "Möbius action on the extended real line; ``math.inf`` is the point at infinity."
        if math.isinf(z):
            return math.inf if self.c == 0 else self.a / self.c
        denominator = self.c * z + self.d
        if denominator == 0:
            return math.inf
        return (self.a * z + self.b) / denominator

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def translation(cls, length):
        "Hyperbolic translation along the imaginary axis, attracting towards 0."
        return cls(math.exp(-0.5 * length), 0.0, 0.0, math.exp(0.5 * length))

    @classmethod
    def parabolic(cls, x):
        "z ↦ z + x"
        return cls(1.0, x, 0.0, 1.0)

    @classmethod
    def rotation(cls):
        "The order two elliptic z ↦ -1/z."
        return cls(0.0, -1.0, 1.0, 0.0)


@dataclass(frozen=True)
class SpiralConfig:
    closed_length: float
    shears: tuple = ()
    offsets: tuple = (0.0, 0.0)
    time: float = 0.0

    def __post_init__(self):
        _require_positive('closed_length', self.closed_length)
        object.__setattr__(self, 'shears', tuple(float(s) for s in self.shears))
        d1, d2 = self.offsets
        if d1 < 0 or d2 < 0:
            raise DomainError('offsets', self.offsets, 'offsets >= 0')

    @property
    def n(self):
        return len(self.shears) + 1


def spiral_horolength(length):
    "Total length of the horocyclic segments spiralling onto a closed leaf of the given length."
    _require_positive('length', length)
    return -1.0 / math.expm1(-length)


def horocycle_partial_sums(length, terms):
    "Partial sums of the geometric series 1 + e^{-ℓ} + e^{-2ℓ} + ... (oracle for spiral_horolength)"
    _require_positive('length', length)
    ratio = math.exp(-length)
    sums = []
    total, term = 0.0, 1.0
    for _ in range(terms):
        total += term
        term *= ratio
        sums.append(total)
    return sums


def shear_partial_sums(shears):
    "Running sums s₁, s₁+s₂, ... of a shear list."
    return [float(p) for p in np.cumsum(np.asarray(shears, dtype=float))]


def component_ratio(shears, closed_length):
    _require_positive('closed_length', closed_length)
    numerator = 1.0 + sum(math.exp(-p) for p in shear_partial_sums(shears))
    return numerator * spiral_horolength(closed_length)


def stretched_horolength(cfg):
    """
    Length of the horocyclic arc through the central stable triangle after a
    time ``cfg.time`` stretch.
    """
    k = math.exp(cfg.time)
    d1, d2 = cfg.offsets
    return (math.exp(-k * d1) + math.exp(-k * d2)) * spiral_horolength(k * cfg.closed_length)


def horolength_derivative(cfg):
    "d/dt of stretched_horolength, evaluated at ``cfg.time``."
    k = math.exp(cfg.time)
    d1, d2 = (k * d for d in cfg.offsets)
    length = k * cfg.closed_length
    horo = spiral_horolength(length)
    first = -(d1 * math.exp(-d1) + d2 * math.exp(-d2)) * horo
    second = -length * math.exp(-length) * (math.exp(-d1) + math.exp(-d2)) * horo * horo
    return first + second


def holonomy_trace(left_length, right_length, h1, h2, h3, h4):
    """
    Trace of the holonomy of a closed curve crossing a pair of spiralling
    crowns, in terms of the two boundary lengths and the four horocyclic
    detours.
    """
    _require_positive('left_length', left_length)
    _require_positive('right_length', right_length)
    total = 0.5 * (left_length + right_length)
    skew = 0.5 * (left_length - right_length)
    return (
        math.exp(total) * (1.0 + h1 * h2) * (1.0 + h3 * h4)
        + math.exp(skew) * h1 * h4
        + math.exp(-skew) * h2 * h3
        + math.exp(-total)
    )


def holonomy_word(left_length, right_length, h1, h2, h3, h4):
    """
    The ten matrices whose product is the holonomy measured by holonomy_trace.

    Each side contributes a translation along its boundary geodesic, followed
    by a horocyclic detour conjugated by the rotation, and a second detour.
    """
    rotation = Isom2.rotation()
    return [
        Isom2.translation(left_length),
        rotation, Isom2.parabolic(-h1), rotation.inverse(),
        Isom2.parabolic(h2),
        Isom2.translation(right_length),
        rotation, Isom2.parabolic(-h3), rotation.inverse(),
        Isom2.parabolic(h4),
    ]


def word_product(word):
    product = Isom2.identity()
    for matrix in word:
        product = product @ matrix
    return product


def develop_annulus_cover(length, twist, pattern, t):
    """
    Develop the stretched (1,1)-crowned annulus in the upper half plane.

    The lift of the core geodesic is the imaginary axis. Returns the ideal
    endpoints (u₁ < 0 < u₂) of the lift of the orthogonal arc σ after the
    time ``t`` stretch; the twist is log|u₂/u₁|.

    ``pattern`` is the pattern *name* ('parallel', 'opposite+', 'opposite-'),
    so that this module stays independent of the annulus module.
    """
    _require_positive('length', length)
    k = math.exp(t)

    if pattern == 'opposite-':
        # Reversing the orientation of the annulus exchanges the two crowns.
        v1, v2 = develop_annulus_cover(length, -twist, 'opposite+', t)
        return -v2, -v1

    # Horocyclic widths come from summing the spiral series of the stretched
    # closed leaf, up to MAX_SERIES_TERMS terms.
    terms = max(2, int(math.ceil(40.0 / (k * length))) + 2)
    if terms > MAX_SERIES_TERMS:
        width = spiral_horolength(k * length)
    else:
        width = horocycle_partial_sums(k * length, terms)[-1]

    if pattern == 'parallel':
        height = (-math.expm1(-length)) * width
        u1 = -math.exp(-0.5 * k * twist) * height
        u2 = math.exp(0.5 * k * twist) * height
        return u1, u2
    elif pattern == 'opposite+':
        # Each of the K-fold stretched horocyclic segments shrinks by the
        # factor (1 - e^{-ℓ}); the second crown is the image of the first
        # under the involution z ↦ -1/z fixing i.
        height = math.exp(k * log1mexp(length)) * width
        u1 = -math.exp(-0.5 * k * twist) * height
        u2 = Isom2.rotation().apply(u1)
        return u1, u2

    raise DomainError('pattern', pattern, "one of 'parallel', 'opposite+', 'opposite-'")


def developed_twist(endpoints):
    u1, u2 = endpoints
    return math.log(abs(u2 / u1))


def pants_shear_values(alpha, beta, gamma):
    """
    The four candidate absolute shears across the seam of a pair of pants
    with boundary lengths alpha, beta, gamma (0 for a cusp).
    """
    lengths = (alpha, beta, gamma)
    if any(value < 0 for value in lengths):
        raise DomainError('pants lengths', lengths, 'lengths >= 0')
    return (
        0.5 * abs(alpha + beta + gamma),
        0.5 * abs(alpha - beta - gamma),
        0.5 * abs(alpha - beta + gamma),
        0.5 * abs(alpha + beta - gamma),
    )
