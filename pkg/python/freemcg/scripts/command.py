import os

from ..setup_logger import logger
from ..errors import ConfigError
from ..freemcgobject import FreeMcgObject
from ..models import Classifier
from ..diffusion import Prior, NoiseSchedule
from ..io import read_array, write_array

class Command(FreeMcgObject):
    """
    One sub-command of the command line tool. Registers its arguments,
    initializes from the parsed argument dictionary and returns the list of
    files it wrote.
    """

    def __init__(self, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, Command):
            self.script = None
            self.outdir = None
            self.seed = 0
            self.threads = None
            self.debug = False
            self.outputs = []
            self.input = None
            self.classifier = None
            self.prior = None
        else:
            self.script = orig.script
            self.outdir = orig.outdir
            self.seed = orig.seed
            self.threads = orig.threads
            self.debug = orig.debug
            self.outputs = list(orig.outputs)
            self.input = orig.input
            self.classifier = orig.classifier
            self.prior = orig.prior

    def add_args(self, parser):
        pass

    def add_model_args(self, parser, prior=True, schedule=True):
        parser.add_argument('--input', type=str, help='Input array file.\n')
        parser.add_argument('--model', type=str, help='Classifier JSON file.\n')
        if prior:
            parser.add_argument('--prior', type=str, help='Prior JSON file.\n')
        if schedule:
            NoiseSchedule().add_args(parser)

    def init_from_args(self, script, args):
        super().init_from_args(None, args)

        self.script = script
        self.outdir = script.outdir
        self.seed = script.seed
        self.threads = script.threads
        self.debug = script.debug

    def require_arg(self, name):
        if not self.is_arg(name):
            raise ConfigError('Missing required argument `--{}`.'.format(name.replace('_', '-')))
        return self.args[name]

    def needs_prior(self):
        return 'prior' in self.args

    def validate(self):
        """
        Reads the input files the command takes. Runs before the output
        directory is created so that bad inputs leave nothing behind.
        """
        if 'input' in self.args:
            self.load_input()
            self.load_classifier()
        if self.is_arg('prior') or self.needs_prior():
            self.load_prior()

    def load_input(self):
        if self.input is None:
            self.input = read_array(self.require_arg('input'))
        return self.input

    def load_classifier(self):
        if self.classifier is None:
            self.classifier = Classifier.load(self.require_arg('model'))
        return self.classifier

    def load_prior(self):
        if self.prior is None:
            self.prior = Prior.load(self.require_arg('prior'))
        return self.prior

    def create_schedule(self):
        s = NoiseSchedule()
        s.init_from_args(None, self.args)
        return s

    def get_path(self, *parts):
        return os.path.join(self.outdir, *parts)

    def save_array(self, name, a):
        self.outputs.extend(write_array(self.get_path(name), a))

    def save_json_output(self, name, obj):
        self.outputs.append(self.script.dump_json(obj, self.get_path(name)))

    def save_csv(self, name, df):
        fn = self.get_path(name)
        df.to_csv(fn, index=False)
        self.outputs.append(fn)

    def run(self):
        raise NotImplementedError()
