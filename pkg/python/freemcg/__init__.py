from ._version import VERSION
from .freemcgobject import FreeMcgObject
from .errors import FreeMcgError, ConfigError, DataFileError, NumericalError, InvalidInputError, DivergenceError
from . import util
