import numpy as np

from ..errors import InvalidInputError
from .oracleclassifier import OracleClassifier

class LinearSoftmax(OracleClassifier):
    """
    Linear logits f(x) = W x + b.
    """

    KIND = 'linear'

    def __init__(self, W=None, b=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, LinearSoftmax):
            self.W = None
            self.b = None
            if W is not None:
                self.set_params(W, b)
        else:
            self.W = orig.W
            self.b = orig.b

    def set_params(self, W, b=None):
        W = np.atleast_2d(np.asarray(W, dtype=float))
        b = np.zeros(W.shape[0]) if b is None else np.asarray(b, dtype=float)
        if b.shape != (W.shape[0],):
            raise InvalidInputError('Bias must have one entry per class.')
        if not np.all(np.isfinite(W)) or not np.all(np.isfinite(b)):
            raise InvalidInputError('Classifier parameters must be finite.')
        self.W = self.freeze(W)
        self.b = self.freeze(b)
        self.dim_out, self.dim_in = W.shape

    def eval_impl(self, x):
        return x @ self.W.T + self.b

    def jacobian_impl(self, x):
        return np.array(self.W)

    def to_dict(self):
        d = super().to_dict()
        d['W'] = self.W.tolist()
        d['b'] = self.b.tolist()
        return d

    def init_from_dict(self, d):
        self.set_params(d['W'], d.get('b'))
