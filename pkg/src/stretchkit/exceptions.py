import json


class StretchkitError(Exception):
    def __init__(self, error_code):
        self.error_code = error_code

    def to_json(self):
        "A single-line, machine readable rendering of the error"
        return json.dumps(
            {
                'error': type(self).__name__,
                'exit_code': self.error_code,
                'message': str(self),
            },
            sort_keys=True,
        )


class NoCommandError(StretchkitError):
    def __init__(self, msg):
        super().__init__(0)
        self.msg = msg

    def __str__(self):
        return self.msg


class ValidationFlagError(StretchkitError):
    """
    A computation finished, but its validation report is outside tolerance.

    The artefacts have still been written; the distinct exit code lets
    scripted experiments tell a flagged run from a broken one.
    """
    def __init__(self, command, report):
        super().__init__(2)
        self.command = command
        self.report = report

    def __str__(self):
        return "The {self.command} validation report was flagged: {self.report}".format(self=self)


class InputError(StretchkitError):
    def __init__(self, msg):
        super().__init__(3)
        self.msg = msg

    def __str__(self):
        return self.msg


class InvalidArgumentsError(InputError):
    def __init__(self, prog, msg):
        self.prog = prog
        super().__init__(msg="{prog}: {msg}".format(prog=prog, msg=msg))


class ConfigError(InputError):
    def __str__(self):
        return "Configuration error: {self.msg}".format(self=self)


class SpecFormatError(InputError):
    def __init__(self, source, msg):
        self.source = source
        super().__init__(msg="Unable to read {source}: {msg}".format(source=source, msg=msg))


class DomainError(InputError):
    def __init__(self, quantity, value, requirement):
        self.quantity = quantity
        self.value = value
        self.requirement = requirement
        super().__init__(
            msg="{quantity} = {value!r} is outside the domain ({requirement})".format(
                quantity=quantity,
                value=value,
                requirement=requirement,
            )
        )


class NonHyperbolicError(InputError):
    def __init__(self, trace):
        self.trace = trace
        super().__init__(msg="non-hyperbolic element (trace {trace!r})".format(trace=trace))


class DegenerateStructureError(InputError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(msg="degenerate structure: {detail}".format(detail=detail))


class InvalidStructureError(InputError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(msg="invalid structure: {detail}".format(detail=detail))


class IntersectionError(InputError):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            msg="slopes {first} and {second} are disjoint; "
                "a positive intersection number is required".format(first=first, second=second)
        )


class DegeneratePolytopeError(InputError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(msg="degenerate polytope: {detail}".format(detail=detail))


class InteriorPointError(InputError):
    def __init__(self, point):
        self.point = point
        super().__init__(msg="point {point} lies in the interior of the body".format(point=_fmt(point)))


class ExteriorPointError(InputError):
    def __init__(self, point):
        self.point = point
        super().__init__(msg="point {point} lies outside the body".format(point=_fmt(point)))


class OriginNotInteriorError(InputError):
    def __init__(self):
        super().__init__(msg="the origin is not strictly inside the body")


class NotAdherenceClosedError(InputError):
    def __init__(self, face, closure):
        self.face = face
        self.closure = closure
        super().__init__(
            msg="face {face!r} is not adherence-closed (its closure is {closure!r})".format(
                face=face,
                closure=closure,
            )
        )


class PosetError(InputError):
    pass


def _fmt(point):
    return '(' + ', '.join(str(c) for c in point) + ')'
