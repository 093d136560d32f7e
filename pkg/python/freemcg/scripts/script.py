import os
import sys
import json
import yaml
import hashlib
import logging
import numpy as np

from ..setup_logger import logger
from .. import util
from ..util import ArgumentParser
from ..util.args import check_known_args
from ..errors import ConfigError, DataFileError
from .._version import VERSION

class Script():
    """
    Base of the command line tools: builds the parser from the registered
    command configurations, merges config files with command line flags,
    sets up logging and writes the resolved arguments and the run manifest
    into the output directory.
    """

    CONFIG_COMMAND = 'command'
    CONFIG_TYPE = 'type'

    # Arguments that do not change the results and stay out of the manifest
    MANIFEST_OMIT = ['config', 'out', 'log_dir', 'log_level', 'debug', 'threads']

    def __init__(self, logging_enabled=True):
        self.parser = None
        self.parser_configurations = {}
        self.args = None
        self.loaded_configs = []
        self.debug = False
        self.log_level = None
        self.log_dir = None
        self.logging_enabled = logging_enabled
        self.logging_console_handler = None
        self.logging_file_handler = None
        self.dump_config = True
        self.outdir = None
        self.threads = None
        self.seed = 0
        self.command = None
        self.outputs = []

    def find_configurations(self):
        from .configurations import COMMAND_CONFIGURATIONS
        self.parser_configurations = COMMAND_CONFIGURATIONS
        logger.debug('Found {} command configurations: {}'.format(
            len(self.parser_configurations), ' '.join(self.parser_configurations.keys())))

    def create_parser(self):
        self.parser = ArgumentParser(load_config_func=self.load_args, prog='freemcg')
        self.add_subparsers(self.parser)

    def add_subparsers(self, parser):
        cps = parser.add_subparsers(dest=self.CONFIG_COMMAND, required=True)
        for c in self.parser_configurations:
            logger.debug('Registering sub-parser for command `{}`'.format(c))
            cp = cps.add_parser(c)
            command = self.create_command(self.parser_configurations[c])
            self.add_args(cp)
            command.add_args(cp)

    def create_command(self, config):
        return config[self.CONFIG_TYPE]()

    def get_arg(self, name, old_value, args=None):
        args = args or self.args
        return util.args.get_arg(name, old_value, args)

    def is_arg(self, name, args=None):
        args = args or self.args
        return util.args.is_arg(name, args)

    def add_args(self, parser):
        parser.add_argument('--config', type=str, nargs='+', help='Load config from JSON or YAML file.')
        parser.add_argument('--debug', action='store_true', help='Run in debug mode.\n')
        parser.add_argument('--threads', type=int, help='Number of processing threads.\n')
        parser.add_argument('--log-level', type=str, default=None, help='Logging level\n')
        parser.add_argument('--log-dir', type=str, default=None, help='Log directory\n')
        parser.add_argument('--seed', type=int, default=None, help='Master random seed\n')
        parser.add_argument('--out', type=str, help='Output directory\n')

    def parse_args(self, argv=None):
        if self.args is None:
            self.args = self.parser.parse_args(argv)

            # Config files may not contain anything the parser doesn't know
            known = self.parser.get_known_dests() | {'config'}
            for filename, config in self.loaded_configs:
                check_known_args(config, known, source=filename)

            self.command = self.args[self.CONFIG_COMMAND]
            self.debug = self.get_arg('debug', self.debug)
            self.threads = self.get_arg('threads', self.threads)
            self.log_level = self.get_arg('log_level', self.log_level)
            self.log_dir = self.get_arg('log_dir', self.log_dir)
            self.seed = self.get_arg('seed', self.seed)
            self.outdir = self.get_arg('out', self.outdir)

            if int(self.seed) != self.seed or self.seed < 0 or self.seed > 0xFFFFFFFFFFFFFFFF:
                raise ConfigError('Seed must be a 64-bit unsigned integer, got {}.'.format(self.seed))
            if self.outdir is None:
                raise ConfigError('Missing required argument `--out`.')

    def load_args(self, filename):
        """
        Loads a JSON or YAML configuration file into a dictionary.
        """
        try:
            with open(filename, 'r') as f:
                if os.path.splitext(filename)[1].lower() in ('.yaml', '.yml'):
                    args = yaml.safe_load(f)
                else:
                    args = json.load(f)
        except (OSError, json.JSONDecodeError, yaml.YAMLError) as ex:
            raise ConfigError('Cannot read configuration file `{}`: {}'.format(filename, ex))
        if not isinstance(args, dict):
            raise ConfigError('Configuration file `{}` must contain a dictionary.'.format(filename))
        args = {k.replace('-', '_'): v for k, v in args.items()}
        self.loaded_configs.append((filename, args))
        return args

    @staticmethod
    def dump_json_default(obj):
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, (set, tuple)):
            return list(obj)
        return "(not serialized)"

    def dump_json(self, obj, filename):
        with open(filename, 'w') as f:
            json.dump(obj, f, default=Script.dump_json_default, indent=4, sort_keys=True)
        return filename

    def dump_args_json(self, filename):
        self.dump_json(self.args, filename)

    def dump_args_yaml(self, filename):
        args = json.loads(json.dumps(self.args, default=Script.dump_json_default))
        with open(filename, 'w') as f:
            yaml.dump(args, f, indent=4)

    def create_output_dir(self, dir):
        logger.info('Output directory is {}'.format(dir))
        if os.path.exists(dir):
            if not os.path.isdir(dir):
                raise DataFileError('Output path `{}` is not a directory.'.format(dir))
            if len(os.listdir(dir)) != 0:
                raise DataFileError('Output directory is not empty: `{}`'.format(dir))
        else:
            logger.info('Creating output directory {}'.format(dir))
            os.makedirs(dir)

    def get_logging_level(self):
        if not self.logging_enabled:
            return logging.FATAL
        elif self.debug:
            return logging.DEBUG
        elif self.log_level is not None:
            return util.logging.parse_level(self.log_level)
        else:
            return logging.INFO

    def setup_logging(self, logfile=None):
        log_level = self.get_logging_level()

        root = logging.getLogger()
        root.setLevel(log_level)

        formatter = logging.Formatter('%(levelname)s:%(name)s:%(asctime)s:%(message)s')

        if self.logging_console_handler is None:
            self.logging_console_handler = logging.StreamHandler(sys.stdout)
            root.addHandler(self.logging_console_handler)
        self.logging_console_handler.setLevel(log_level)
        self.logging_console_handler.setFormatter(formatter)

        if logfile is not None and self.logging_file_handler is None:
            self.logging_file_handler = logging.FileHandler(logfile)
            self.logging_file_handler.setLevel(log_level)
            self.logging_file_handler.setFormatter(formatter)
            root.addHandler(self.logging_file_handler)

    def close_logging(self):
        root = logging.getLogger()
        for h in [self.logging_console_handler, self.logging_file_handler]:
            if h is not None:
                root.removeHandler(h)
                h.close()
        self.logging_console_handler = None
        self.logging_file_handler = None

    def init_logging(self, outdir):
        logdir = self.log_dir or os.path.join(outdir, 'logs')
        os.makedirs(logdir, exist_ok=True)

        logfile = os.path.join(logdir, '{}.log'.format(self.command))
        self.setup_logging(logfile=logfile)

        if self.dump_config:
            self.dump_args_json(os.path.join(outdir, 'args.json'))
            self.dump_args_yaml(os.path.join(outdir, 'args.yaml'))

    def get_resolved_config(self):
        return {k: v for k, v in sorted(self.args.items()) if k not in self.MANIFEST_OMIT}

    @staticmethod
    def hash_file(filename):
        h = hashlib.sha256()
        with open(filename, 'rb') as f:
            for chunk in iter(lambda: f.read(1 << 16), b''):
                h.update(chunk)
        return h.hexdigest()

    def write_manifest(self):
        """
        Writes `manifest.json` with the resolved configuration, seed, code
        version and content hashes of all outputs. Paths are relative to the
        output directory.
        """
        outputs = {}
        for fn in sorted(set(self.outputs)):
            outputs[os.path.relpath(fn, self.outdir)] = Script.hash_file(fn)
        manifest = {
            'command': self.command,
            'version': VERSION,
            'seed': self.seed,
            'config': self.get_resolved_config(),
            'outputs': outputs,
        }
        return self.dump_json(manifest, os.path.join(self.outdir, 'manifest.json'))

    def execute(self, argv=None):
        try:
            self.prepare(argv)
            self.run()
            self.finish()
        finally:
            if self.logging_enabled:
                self.close_logging()

    def prepare(self, argv=None):
        if self.logging_enabled:
            self.setup_logging()

        self.find_configurations()
        self.create_parser()
        self.parse_args(argv)

        if self.logging_enabled:
            self.setup_logging()

        self.validate()
        self.create_output_dir(self.outdir)
        if self.logging_enabled:
            self.init_logging(self.outdir)
        elif self.dump_config:
            self.dump_args_json(os.path.join(self.outdir, 'args.json'))
            self.dump_args_yaml(os.path.join(self.outdir, 'args.yaml'))

        if self.debug:
            np.seterr(divide='raise', over='raise', invalid='raise')

    def validate(self):
        pass

    def run(self):
        raise NotImplementedError()

    def finish(self):
        fn = self.write_manifest()
        logger.info('Wrote manifest {} with {} outputs.'.format(fn, len(self.outputs)))
