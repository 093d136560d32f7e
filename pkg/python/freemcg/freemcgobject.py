import numpy as np

from .util.args import get_arg, is_arg

class FreeMcgObject():
    """
    Implements basic functions shared by configurable objects: copying and
    reading command-line arguments.
    """

    def __init__(self, orig=None):
        if isinstance(orig, FreeMcgObject):
            self.args = orig.args
        else:
            self.args = None

    def copy(self):
        return type(self)(orig=self)

    def get_arg(self, name, old_value, args=None):
        """
        Reads a command-line argument if specified, otherwise uses a default value.

        :param name: Name of the argument.
        :param old_value: Default value of the argument in case in doesn't exist in args.
        :param args: Argument dictionary. If None, self.args will be used.
        :return: The parsed command-line argument.
        """

        args = args or self.args or {}
        return get_arg(name, old_value, args)

    def is_arg(self, name, args=None):
        """
        Checks if an (optional) command-line argument is specified.

        :param name: Name of the argument.
        :param args: Argument dictionary. If None, self.args will be used.
        :return: True if the optional command-line argument is specified.
        """

        args = args or self.args or {}
        return is_arg(name, args)

    def add_args(self, parser):
        pass

    def init_from_args(self, config, args):
        self.args = args

    @staticmethod
    def save_json_default(o):
        """
        JSON fallback for numpy values in parameter dictionaries.
        """
        if isinstance(o, np.ndarray):
            return o.tolist()
        elif isinstance(o, np.generic):
            return o.item()
        elif isinstance(o, (set, tuple)):
            return list(o)
        raise TypeError('Object of type {} is not JSON serializable.'.format(type(o).__name__))
