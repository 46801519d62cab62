"""
Parsers for the textual forms of command line arguments.
"""
import json
import math
from pathlib import Path

from stretchkit.annulus import CrownedAnnulusMetric
from stretchkit.exceptions import SpecFormatError
from stretchkit.surface.torus import PRESETS, ChartPoint, FrickeTriple, Slope, fn_to_fricke

SCHEMA_VERSION = 1


def parse_real(text):
    """
    A float, or the natural logarithm ``ln<x>`` / ``-ln<x>`` of one
    (``ln2`` is log 2).
    """
    if isinstance(text, (int, float)):
        return float(text)
    value = text.strip()
    sign = 1.0
    if value.startswith('-ln'):
        sign, value = -1.0, value[1:]
    try:
        if value.startswith('ln'):
            return sign * math.log(float(value[2:]))
        return float(value)
    except ValueError:
        raise SpecFormatError(repr(text), "expected a number, or ln<x>")


def parse_slopes(text):
    "A comma separated list of p/q slopes."
    return [Slope.parse(item) for item in text.split(',') if item.strip()]


def parse_pair(text):
    try:
        first, second = (parse_real(item) for item in text.split(','))
    except ValueError:
        raise SpecFormatError(repr(text), "expected two comma separated numbers")
    return first, second


def _fields(text):
    fields = {}
    for item in text.split(','):
        key, sep, value = item.partition('=')
        if not sep:
            raise SpecFormatError(repr(text), "expected key=value fields, found {item!r}".format(item=item))
        fields[key.strip()] = value.strip()
    return fields


def _shears(text):
    if not text:
        return ()
    return tuple(parse_real(item) for item in text.split(':'))


def parse_annulus(text):
    """
    ``l=<length>,tau=<twist>[,sL=a:b,sR=c]``, where sL and sR list the
    interior shears of the two crowns.
    """
    fields = _fields(text)
    unknown = set(fields) - {'l', 'tau', 'sL', 'sR'}
    if unknown or 'l' not in fields:
        raise SpecFormatError(repr(text), "annuli are written l=<length>,tau=<twist>[,sL=a:b,sR=c]")
    return CrownedAnnulusMetric(
        length=parse_real(fields['l']),
        twist=parse_real(fields.get('tau', '0')),
        left_shears=_shears(fields.get('sL')),
        right_shears=_shears(fields.get('sR')),
    )


def parse_chart(text):
    fields = _fields(text)
    if set(fields) - {'l', 'tau'} or 'l' not in fields:
        raise SpecFormatError(repr(text), "chart points are written l=<length>,tau=<twist>")
    return ChartPoint(length=parse_real(fields['l']), twist=parse_real(fields.get('tau', '0')))


def surface_from_document(document, source):
    if not isinstance(document, dict) or document.get('schema_version') != SCHEMA_VERSION:
        raise SpecFormatError(source, "expected a surface document with schema_version {v}".format(v=SCHEMA_VERSION))
    try:
        if 'fricke' in document:
            a, b, c = (float(v) for v in document['fricke'])
            return FrickeTriple.from_traces(a, b, c)
        chart = document['chart']
        return fn_to_fricke(ChartPoint(length=float(chart['l']), twist=float(chart.get('tau', 0.0))))
    except (KeyError, TypeError, ValueError) as e:
        raise SpecFormatError(source, "malformed surface document ({e})".format(e=e))


def parse_surface(text):
    """
    A structure on the punctured torus, as a Fricke triple: a preset name,
    ``a,b,c``, ``l=<length>,tau=<twist>``, or a JSON surface document.
    """
    text = text.strip()
    if text in PRESETS:
        return PRESETS[text]
    if '=' in text:
        return fn_to_fricke(parse_chart(text))
    if ',' in text:
        try:
            a, b, c = (parse_real(item) for item in text.split(','))
        except ValueError:
            raise SpecFormatError(repr(text), "Fricke triples are written a,b,c")
        return FrickeTriple.from_traces(a, b, c)
    path = Path(text)
    try:
        with path.open(encoding='utf-8') as f:
            document = json.load(f)
    except FileNotFoundError:
        raise SpecFormatError(
            text, "not a preset ({presets}), a triple, a chart point or a file".format(presets=', '.join(PRESETS))
        )
    except json.JSONDecodeError as e:
        raise SpecFormatError(text, "invalid JSON ({e})".format(e=e))
    return surface_from_document(document, text)
