import numpy as np
from scipy.linalg import cho_factor, cho_solve
from scipy.special import logsumexp, softmax
from scipy.stats import multivariate_normal

from ..errors import InvalidInputError
from .prior import Prior

class GaussianMixturePrior(Prior):
    """
    Mixture of Gaussians sum_j w_j N(mu_j, Sigma_j). Covariances may be
    singular.
    """

    KIND = 'gmm'

    def __init__(self, weights=None, means=None, covs=None):
        super().__init__()

        self.weights = None
        self.means = None
        self.covs = None

        if means is not None:
            self.set_params(weights, means, covs)

    def set_params(self, weights, means, covs):
        means = np.atleast_2d(np.asarray(means, dtype=float))
        k, d = means.shape
        weights = np.full(k, 1.0 / k) if weights is None else np.asarray(weights, dtype=float)
        covs = np.asarray(covs, dtype=float)
        if covs.ndim == 2:
            covs = np.broadcast_to(covs, (k, d, d)).copy()

        if weights.shape != (k,) or covs.shape != (k, d, d):
            raise InvalidInputError('Mixture parameter shapes are inconsistent.')
        if np.any(weights < 0) or abs(weights.sum() - 1.0) > 1e-9:
            raise InvalidInputError('Mixture weights must be nonnegative and sum to one.')
        if not np.all(np.isfinite(means)) or not np.all(np.isfinite(covs)):
            raise InvalidInputError('Mixture parameters must be finite.')
        for c in covs:
            if np.max(np.abs(c - c.T), initial=0.0) > 1e-12:
                raise InvalidInputError('Mixture covariances must be symmetric.')
            if np.linalg.eigvalsh(c)[0] < -1e-10 * max(1.0, np.abs(c).max()):
                raise InvalidInputError('Mixture covariances must be positive semidefinite.')

        self.weights = weights
        self.means = means
        self.covs = covs
        self.dim = d

    @property
    def components(self):
        return self.means.shape[0]

    def denoise_impl(self, x_t, t, s):
        ab = s.alpha_bar_at(t)
        s2 = s.sigma_at(t) ** 2
        u = x_t / np.sqrt(ab)

        with np.errstate(divide='ignore'):
            log_w = np.log(self.weights)

        log_r = np.empty((u.shape[0], self.components))
        post = np.empty((self.components,) + u.shape)
        for j in range(self.components):
            S = self.covs[j] + s2 * np.eye(self.dim)
            cho = cho_factor(S, lower=True)
            diff = u - self.means[j]
            sol = cho_solve(cho, diff.T).T
            logdet = 2 * np.sum(np.log(np.diag(cho[0])))
            log_r[:, j] = log_w[j] - 0.5 * np.sum(diff * sol, axis=-1) - 0.5 * logdet
            post[j] = self.means[j] + sol @ self.covs[j]

        r = softmax(log_r, axis=-1)
        return np.einsum('mj,jmd->md', r, post)

    def component_sample(self, j, n, rng):
        return rng.multivariate_normal(self.means[j], self.covs[j], size=n, method='eigh')

    def sample(self, n, rng, return_labels=False):
        labels = rng.choice(self.components, size=n, p=self.weights)
        x = np.empty((n, self.dim))
        for j in range(self.components):
            ix = labels == j
            if np.any(ix):
                x[ix] = self.component_sample(j, int(ix.sum()), rng)
        if return_labels:
            return x, labels
        return x

    def component_log_pdf(self, x, j):
        return multivariate_normal.logpdf(x, mean=self.means[j], cov=self.covs[j], allow_singular=True)

    def log_pdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide='ignore'):
            lp = np.stack([np.log(self.weights[j]) + self.component_log_pdf(x, j)
                           for j in range(self.components)], axis=-1)
        return logsumexp(lp, axis=-1)

    def mean(self):
        return self.weights @ self.means

    def covariance(self):
        m = self.mean()
        c = np.zeros((self.dim, self.dim))
        for j in range(self.components):
            d = self.means[j] - m
            c += self.weights[j] * (self.covs[j] + np.outer(d, d))
        return c

    def to_dict(self):
        d = super().to_dict()
        d['weights'] = self.weights.tolist()
        d['means'] = self.means.tolist()
        d['covs'] = self.covs.tolist()
        return d

    def init_from_dict(self, d):
        self.set_params(d.get('weights'), d['means'], d['covs'])

def gmm_denoise(x_t, t, prior, s):
    return prior.denoise(x_t, t, s)
