import numpy as np
from scipy.linalg import eigh

from ..constants import Constants
from ..errors import InvalidInputError

class EnsembleStats():
    """
    Ensemble means and covariances with 1/K normalization:

        C_xx = 1/K sum_k (x_k - x_bar)(x_k - x_bar)^T
        C_xf = 1/K sum_k (x_k - x_bar)(f_k - f_bar)^T
    """

    def __init__(self, mean_x=None, mean_f=None, cov_xx=None, cov_xf=None):
        self.mean_x = mean_x
        self.mean_f = mean_f
        self.cov_xx = cov_xx
        self.cov_xf = cov_xf

    def eigen_check(self, K):
        """
        Verifies that C_xx acts on its eigenvectors as the eigenvalues and that
        the spectrum beyond min(K - 1, d) vanishes. Returns the largest
        eigen-equation residual and the largest trailing eigenvalue.
        """
        lam, vec = eigh(self.cov_xx)
        lam, vec = lam[::-1], vec[:, ::-1]
        res = np.max(np.linalg.norm(self.cov_xx @ vec - vec * lam, axis=0))
        r = min(K - 1, lam.shape[0])
        tail = float(np.max(np.abs(lam[r:]))) if r < lam.shape[0] else 0.0
        return float(res), tail

def ensemble_stats(e):
    """
    Computes EnsembleStats of a ParticleEnsemble. The d x d covariance is
    materialized, so this is meant for moderate dimensions.
    """
    if e.K < 1:
        raise InvalidInputError('Ensemble is empty.')
    dx = e.deviations_x()
    df = e.deviations_f()
    return EnsembleStats(
        mean_x=e.mean_x(),
        mean_f=e.mean_f(),
        cov_xx=dx.T @ dx / e.K,
        cov_xf=dx.T @ df / e.K)

def check_materialize(d, limit=Constants.MATERIALIZE_MAX_DIM):
    if d > limit:
        raise InvalidInputError('Refusing to materialize a {0}x{0} covariance (limit {1}).'.format(d, limit))
