import numpy as np

from ..errors import InvalidInputError
from .oracleclassifier import OracleClassifier

class RbfSoftmax(OracleClassifier):
    """
    Radial logits f_c(x) = -||x - mu_c||^2 / h^2, one center per class.
    """

    KIND = 'rbf'

    def __init__(self, centers=None, bandwidth=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, RbfSoftmax):
            self.centers = None
            self.bandwidth = None
            if centers is not None:
                self.set_params(centers, bandwidth)
        else:
            self.centers = orig.centers
            self.bandwidth = orig.bandwidth

    def set_params(self, centers, bandwidth=None):
        centers = np.atleast_2d(np.asarray(centers, dtype=float))
        try:
            bandwidth = 1.0 if bandwidth is None else float(bandwidth)
        except (TypeError, ValueError):
            raise InvalidInputError('RBF bandwidth must be a number, got `{}`.'.format(bandwidth))
        if not bandwidth > 0:
            raise InvalidInputError('RBF bandwidth must be positive.')
        if not np.all(np.isfinite(centers)):
            raise InvalidInputError('RBF centers must be finite.')
        self.centers = self.freeze(centers)
        self.bandwidth = bandwidth
        self.dim_out, self.dim_in = centers.shape

    def eval_impl(self, x):
        d = x[:, None, :] - self.centers[None, :, :]
        return -np.sum(d ** 2, axis=-1) / self.bandwidth ** 2

    def jacobian_impl(self, x):
        return -2 * (x[None, :] - self.centers) / self.bandwidth ** 2

    def to_dict(self):
        d = super().to_dict()
        d['centers'] = self.centers.tolist()
        d['bandwidth'] = self.bandwidth
        return d

    def init_from_dict(self, d):
        self.set_params(d['centers'], d.get('bandwidth'))
