import numpy as np

from ..setup_logger import logger
from ..constants import Constants
from ..errors import ConfigError
from ..io import read_array
from ..attribution import AttributionConfig, attribute, baseline_vanilla_gradient, baseline_input_x_gradient, \
    baseline_integrated_gradients, random_map
from ..evaluation import road_curve
from .command import Command

class RoadCommand(Command):
    """
    Evaluates an attribution map with the ROAD removal curve. The map is read
    from a file or computed with the selected method.
    """

    METHODS = ['freemcg', 'vanilla', 'input_x_gradient', 'integrated_gradients', 'random']

    def __init__(self, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, RoadCommand):
            self.config = AttributionConfig()
            self.method = 'freemcg'
            self.fractions = Constants.DEFAULT_ROAD_FRACTIONS
            self.noise_std = Constants.DEFAULT_ROAD_NOISE_STD
            self.ig_steps = 64
            self.map = None
        else:
            self.config = orig.config.copy()
            self.method = orig.method
            self.fractions = orig.fractions
            self.noise_std = orig.noise_std
            self.ig_steps = orig.ig_steps
            self.map = orig.map

    def add_args(self, parser):
        super().add_args(parser)
        self.add_model_args(parser)
        self.config.add_args(parser)
        parser.add_argument('--map', type=str, help='Attribution map array file.\n')
        parser.add_argument('--method', type=str, choices=RoadCommand.METHODS, help='Attribution method when no map is given.\n')
        parser.add_argument('--fractions', type=float, nargs='+', help='Removal fractions.\n')
        parser.add_argument('--noise-std', type=float, help='Imputation noise.\n')
        parser.add_argument('--ig-steps', type=int, help='Integrated gradients steps.\n')

    def init_from_args(self, script, args):
        super().init_from_args(script, args)
        self.config.init_from_args(None, args)
        self.config.seed = self.seed
        self.method = self.get_arg('method', self.method)
        self.fractions = self.get_arg('fractions', self.fractions)
        self.noise_std = self.get_arg('noise_std', self.noise_std)
        self.ig_steps = self.get_arg('ig_steps', self.ig_steps)

    def needs_prior(self):
        return not self.is_arg('map') and self.method == 'freemcg'

    def validate(self):
        super().validate()
        if self.is_arg('map'):
            self.map = read_array(self.args['map'])

    def create_map(self, m, x):
        if self.map is not None:
            return self.map
        c = self.config.target_class
        if self.method == 'freemcg':
            return attribute(m, self.load_prior(), self.create_schedule(), x, self.config).values
        elif self.method == 'vanilla':
            return baseline_vanilla_gradient(m, x, c).values
        elif self.method == 'input_x_gradient':
            return baseline_input_x_gradient(m, x, c).values
        elif self.method == 'integrated_gradients':
            return baseline_integrated_gradients(m, x, c, steps=self.ig_steps).values
        elif self.method == 'random':
            return random_map(x.shape, seed=self.seed).values
        else:
            raise ConfigError('Unknown attribution method `{}`.'.format(self.method))

    def run(self):
        x = self.load_input()
        m = self.load_classifier()
        values = self.create_map(m, x)

        curve = road_curve(m, x, values, fractions=self.fractions, noise_std=self.noise_std, seed=self.seed)

        self.save_array('map', np.asarray(values))
        self.save_csv('road.csv', curve.to_dataframe())
        report = curve.to_dict()
        report['method'] = 'file' if self.is_arg('map') else self.method
        self.save_json_output('report.json', report)

        logger.info('ROAD AUC {:.4f}'.format(curve.auc))
        return self.outputs
