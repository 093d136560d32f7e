import os
import sys
import argparse
from contextlib import contextmanager

from ..errors import ConfigError

class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that merges one or more JSON or YAML files given with
    `--config` into the parsed arguments. Precedence, highest first:
    explicit command-line values, config files in the order given, parser
    defaults. Config files may name further config files and may also select
    the command, in which case it can be omitted from the command line.
    """

    EXIT_CODE = ConfigError.exit_code

    def __init__(self, load_config_func=None, **kwargs):
        super().__init__(**kwargs)

        self._load_config_func = load_config_func
        self._exit_on_error = True

    def parse_args(self, args=None, namespace=None):
        argv = list(sys.argv[1:] if args is None else args)
        argv = self._complete_commands(argv)

        parsed = vars(super().parse_args(argv, namespace))
        configs = self._load_configs(os.getcwd(), parsed.get('config'))
        if len(configs) == 0:
            return parsed

        for path, config in configs:
            self._apply_config(parsed, path, config)

        # Without defaults only the explicitly given values come back
        self.disable_defaults()
        explicit = vars(super().parse_args(argv))
        parsed.update({k: v for k, v in explicit.items() if v is not None})
        return parsed

    def _complete_commands(self, argv):
        """
        Prepends the command names read from the config files when the
        command line alone does not parse.
        """
        try:
            with self._errors_raise():
                super().parse_args(argv)
            return argv
        except argparse.ArgumentError:
            pass

        paths = self.find_config_paths(argv)
        if paths is None:
            return argv

        merged = {}
        for path, config in self._load_configs(os.getcwd(), paths):
            self._apply_config(merged, path, config)
        return self._get_commands(merged) + argv

    @staticmethod
    def find_config_paths(argv):
        """
        Returns the values following `--config` up to the next option, or
        None when there is no `--config` at all.
        """
        if '--config' not in argv:
            return None
        paths = []
        for arg in argv[argv.index('--config') + 1:]:
            if arg.startswith('-'):
                break
            paths.append(arg)
        return paths

    def _load_configs(self, base, filenames):
        if filenames is None:
            return []
        if isinstance(filenames, str):
            filenames = [filenames]
        configs = []
        for fn in filenames:
            path = os.path.join(base, fn)
            configs.append((path, self._load_config_func(path)))
        return configs

    def _apply_config(self, args, path, config):
        # Nested configs resolve relative to the file that names them
        # and are overridden by the rest of that file.
        for p, c in self._load_configs(os.path.dirname(path), config.get('config')):
            self._apply_config(args, p, c)

        for k, v in config.items():
            if k != 'config' and v is not None:
                args[k] = v

    def _iter_subparsers(self):
        for a in self._actions:
            if isinstance(a, argparse._SubParsersAction):
                yield a

    def _get_commands(self, args):
        commands = []
        for a in self._iter_subparsers():
            if a.dest not in args:
                continue
            name = args[a.dest]
            if name not in a.choices:
                self.error('unknown {} `{}` (choices: {})'.format(a.dest, name, ', '.join(a.choices)))
            commands.append(name)
            commands.extend(a.choices[name]._get_commands(args))
        return commands

    def get_known_dests(self):
        """
        Returns the destination names of all arguments of this parser and
        its subparsers.
        """
        dests = {a.dest for a in self._actions
                 if a.dest != argparse.SUPPRESS and not isinstance(a, (argparse._HelpAction, argparse._VersionAction))}
        for a in self._iter_subparsers():
            for p in a.choices.values():
                dests |= p.get_known_dests()
        return dests

    def disable_defaults(self):
        for a in self._actions:
            if not isinstance(a, (argparse._SubParsersAction, argparse._HelpAction, argparse._VersionAction)):
                a.default = None
        for a in self._iter_subparsers():
            for p in a.choices.values():
                p.disable_defaults()

    def set_exit_on_error(self, enabled=True):
        self._exit_on_error = enabled
        for a in self._iter_subparsers():
            for p in a.choices.values():
                p.set_exit_on_error(enabled=enabled)

    @contextmanager
    def _errors_raise(self):
        self.set_exit_on_error(enabled=False)
        try:
            yield
        finally:
            self.set_exit_on_error(enabled=True)

    def error(self, message):
        if not self._exit_on_error:
            ex = sys.exc_info()[1]
            raise ex if isinstance(ex, argparse.ArgumentError) else argparse.ArgumentError(None, message)

        self.print_usage(sys.stderr)
        self.exit(self.EXIT_CODE, '{}: error: {}\n'.format(self.prog, message))
