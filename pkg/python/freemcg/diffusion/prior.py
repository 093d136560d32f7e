import json
import numpy as np

from ..setup_logger import logger
from ..errors import DataFileError
from .denoiser import Denoiser

class Prior(Denoiser):
    """
    Analytic data distribution p_0(x) whose posterior mean under Gaussian
    noise is available in closed form.
    """

    KIND = None

    def sample(self, n, rng):
        raise NotImplementedError()

    def log_pdf(self, x):
        raise NotImplementedError()

    def to_dict(self):
        return {'kind': self.KIND}

    def init_from_dict(self, d):
        raise NotImplementedError()

    @staticmethod
    def from_dict(d):
        from . import PRIORS
        if 'kind' not in d or d['kind'] not in PRIORS:
            raise DataFileError('Unknown prior kind `{}`.'.format(d.get('kind')))
        p = PRIORS[d['kind']]()
        try:
            p.init_from_dict(d)
        except (KeyError, TypeError, ValueError) as ex:
            raise DataFileError('Invalid `{}` prior parameters: {}'.format(d['kind'], ex))
        return p

    @staticmethod
    def load(filename):
        logger.info('Loading prior from file {}'.format(filename))
        try:
            with open(filename, 'r') as f:
                d = json.load(f)
        except (OSError, json.JSONDecodeError) as ex:
            raise DataFileError('Cannot read prior file `{}`: {}'.format(filename, ex))
        return Prior.from_dict(d)

    def save(self, filename):
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, indent=4)
