import numpy as np

from ..setup_logger import logger
from ..errors import InvalidInputError
from ..counterfactual import CfConfig, generate_counterfactual
from .command import Command

class CounterfactualCommand(Command):
    """
    Generates a counterfactual of a single input by direct ascent or guided
    reverse diffusion and dumps its trajectory.
    """

    def __init__(self, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, CounterfactualCommand):
            self.config = CfConfig()
        else:
            self.config = orig.config.copy()

    def add_args(self, parser):
        super().add_args(parser)
        self.add_model_args(parser)
        self.config.add_args(parser)

    def init_from_args(self, script, args):
        super().init_from_args(script, args)
        self.config.init_from_args(None, args)
        self.config.seed = self.seed
        self.require_arg('target_class')

    def run(self):
        x = self.load_input()
        m = self.load_classifier()
        prior = self.load_prior()
        s = self.create_schedule()

        r = generate_counterfactual(m, prior, s, x, self.config)

        self.save_array('counterfactual', r.x_cf.reshape(x.shape))
        for i, y in enumerate(r.trajectory):
            self.save_array('trajectory/step_{:04d}'.format(i), np.reshape(y, x.shape))
        report = r.to_dict()
        report['mode'] = self.config.mode
        try:
            report['log_density'] = float(prior.log_pdf(r.x_cf))
        except InvalidInputError:
            report['log_density'] = None
        self.save_json_output('report.json', report)

        logger.info('Counterfactual towards class {}: flipped={}, l2={:.4f}'.format(r.target_class, r.flipped, r.l2))
        return self.outputs
