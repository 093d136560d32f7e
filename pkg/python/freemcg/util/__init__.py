from . import logging
from . import args
from .argumentparser import ArgumentParser
from .smartparallel import SmartParallel
from .randomstreams import RandomStreams
from .timer import Timer
from .linalg import gram_schmidt, span_residual
