class FreeMcgError(Exception):
    """
    Base class of all errors raised by the package. The script layer maps
    each family to a distinct process exit code.
    """

    exit_code = 1

class ConfigError(FreeMcgError):
    exit_code = 1

class DataFileError(FreeMcgError):
    exit_code = 2

class NumericalError(FreeMcgError, ValueError):
    exit_code = 3

class InvalidInputError(NumericalError):
    """
    Raised on shape mismatches, non-finite values and out-of-range arguments.
    """
    pass

class DivergenceError(NumericalError):
    exit_code = 4
