import json
import numpy as np

from ..setup_logger import logger
from ..errors import InvalidInputError, DataFileError
from ..freemcgobject import FreeMcgObject
from .softmax import softmax, log_softmax, check_class_index

class Classifier(FreeMcgObject):
    """
    Black-box classifier f: R^d -> R^n. Consumers may only call `eval` and
    the helpers derived from it. Parameters are frozen after construction.
    """

    KIND = None

    def __init__(self, dim_in=None, dim_out=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, Classifier):
            self.dim_in = dim_in
            self.dim_out = dim_out
        else:
            self.dim_in = orig.dim_in
            self.dim_out = orig.dim_out

    @staticmethod
    def freeze(a):
        a = np.array(a, dtype=float)
        a.setflags(write=False)
        return a

    def check_input(self, x):
        x = np.asarray(x, dtype=float)
        if x.ndim == 0 or x.shape[-1] != self.dim_in:
            raise InvalidInputError('Classifier `{}` expects inputs of dimension {}, got shape {}.'.format(
                type(self).__name__, self.dim_in, x.shape))
        if not np.all(np.isfinite(x)):
            raise InvalidInputError('Classifier input must be finite.')
        return x

    def eval(self, x):
        """
        Evaluates the logits.

        :param x: Point of shape (d,) or a batch of shape (..., d).
        :return: Logits of shape (n,) or (..., n).
        """
        x = self.check_input(x)
        shape = x.shape[:-1]
        l = self.eval_impl(x.reshape(-1, self.dim_in))
        return l.reshape(shape + (self.dim_out,))

    def eval_impl(self, x):
        raise NotImplementedError()

    def probabilities(self, x):
        return softmax(self.eval(x))

    def log_prob(self, x, c):
        c = check_class_index(c, self.dim_out)
        return log_softmax(self.eval(x))[..., c]

    def predict(self, x):
        """
        Returns the predicted class index. Ties break to the lowest index.
        """
        p = self.probabilities(x)
        c = np.argmax(p, axis=-1)
        if np.ndim(c) == 0:
            return int(c)
        return c

    def to_dict(self):
        return {
            'kind': self.KIND,
            'dim_in': self.dim_in,
            'dim_out': self.dim_out,
        }

    def init_from_dict(self, d):
        raise NotImplementedError()

    @staticmethod
    def from_dict(d):
        from . import CLASSIFIERS
        if 'kind' not in d or d['kind'] not in CLASSIFIERS:
            raise DataFileError('Unknown classifier kind `{}`.'.format(d.get('kind')))
        m = CLASSIFIERS[d['kind']]()
        try:
            m.init_from_dict(d)
        except (KeyError, TypeError, ValueError) as ex:
            raise DataFileError('Invalid `{}` classifier parameters: {}'.format(d['kind'], ex))
        if 'dim_in' in d and d['dim_in'] != m.dim_in or 'dim_out' in d and d['dim_out'] != m.dim_out:
            raise DataFileError('Classifier dimensions do not match its parameter arrays.')
        return m

    @staticmethod
    def load(filename):
        logger.info('Loading classifier from file {}'.format(filename))
        try:
            with open(filename, 'r') as f:
                d = json.load(f)
        except (OSError, json.JSONDecodeError) as ex:
            raise DataFileError('Cannot read classifier file `{}`: {}'.format(filename, ex))
        return Classifier.from_dict(d)

    def save(self, filename):
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, default=FreeMcgObject.save_json_default, indent=4)
