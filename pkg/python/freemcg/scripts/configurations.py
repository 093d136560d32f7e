from .attributecommand import AttributeCommand
from .counterfactualcommand import CounterfactualCommand
from .roadcommand import RoadCommand
from .verifycommand import VerifyCommand
from .sweepcommand import SweepCommand

COMMAND_CONFIGURATIONS = {
    'attribute': {
        'type': AttributeCommand,
    },
    'counterfactual': {
        'type': CounterfactualCommand,
    },
    'road': {
        'type': RoadCommand,
    },
    'verify': {
        'type': VerifyCommand,
    },
    'sweep': {
        'type': SweepCommand,
    },
}
