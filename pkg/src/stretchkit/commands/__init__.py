from .backtime import BacktimeCommand
from .convex import ConvexCommand
from .distance import DistanceCommand, NormCommand
from .extract_length import ExtractLengthCommand
from .sphere import DualSphereCommand, PrimalSphereCommand
from .stretch import StretchCommand
from .twist_width import TwistWidthCommand

COMMANDS = {
    klass.command: klass
    for klass in (
        StretchCommand,
        BacktimeCommand,
        DistanceCommand,
        NormCommand,
        ExtractLengthCommand,
        TwistWidthCommand,
        ConvexCommand,
        DualSphereCommand,
        PrimalSphereCommand,
    )
}
