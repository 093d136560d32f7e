from ..setup_logger import logger
from ..attribution import AttributionConfig, attribute
from ..io import export_image
from .command import Command

class AttributeCommand(Command):
    """
    Computes the FreeMCG attribution map of a single input.
    """

    def __init__(self, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, AttributeCommand):
            self.config = AttributionConfig()
            self.ppm = None
        else:
            self.config = orig.config.copy()
            self.ppm = orig.ppm

    def add_args(self, parser):
        super().add_args(parser)
        self.add_model_args(parser)
        self.config.add_args(parser)
        parser.add_argument('--ppm', type=str, help='Export the map as a PGM or PPM image, relative to the output directory.\n')

    def init_from_args(self, script, args):
        super().init_from_args(script, args)
        self.config.init_from_args(None, args)
        self.config.seed = self.seed
        self.ppm = self.get_arg('ppm', self.ppm)

    def run(self):
        x = self.load_input()
        m = self.load_classifier()
        prior = self.load_prior()
        s = self.create_schedule()

        a = attribute(m, prior, s, x, self.config)

        self.save_array('attribution', a.values)
        self.save_array('raw_gradient', a.raw_gradient.reshape(a.layout))
        report = a.to_dict()
        report['predicted_class'] = m.predict(x.reshape(-1))
        self.save_json_output('report.json', report)
        if self.ppm is not None:
            self.outputs.append(export_image(self.get_path(self.ppm), a.values))

        logger.info('Attribution for class {} written, degenerate={}'.format(a.target_class, a.degenerate))
        return self.outputs
