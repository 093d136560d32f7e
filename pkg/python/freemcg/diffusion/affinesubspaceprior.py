import numpy as np
from scipy.stats import multivariate_normal

from ..errors import InvalidInputError
from .prior import Prior
from .gaussianmixtureprior import GaussianMixturePrior

class AffineSubspacePrior(Prior):
    """
    Gaussian supported on the affine subspace o + span(B). The latent
    coordinates z = B^T (x - o) are distributed as N(0, latent_cov). When
    latent_cov is None the latent variance is infinite and denoising reduces
    to the orthogonal projection onto the subspace.
    """

    KIND = 'subspace'

    def __init__(self, origin=None, basis=None, latent_cov=None):
        super().__init__()

        self.origin = None
        self.basis = None
        self.latent_cov = None

        if basis is not None:
            self.set_params(origin, basis, latent_cov)

    def set_params(self, origin, basis, latent_cov=None):
        basis = np.asarray(basis, dtype=float)
        if basis.ndim == 1:
            basis = basis[:, None]
        d, m = basis.shape
        origin = np.zeros(d) if origin is None else np.asarray(origin, dtype=float)

        if m >= d:
            raise InvalidInputError('Subspace dimension must be lower than the ambient dimension.')
        if origin.shape != (d,):
            raise InvalidInputError('Subspace origin must have the ambient dimension.')
        if np.max(np.abs(basis.T @ basis - np.eye(m))) > 1e-10:
            raise InvalidInputError('Subspace basis must be orthonormal.')
        if latent_cov is not None:
            latent_cov = np.atleast_2d(np.asarray(latent_cov, dtype=float))
            if latent_cov.shape != (m, m):
                raise InvalidInputError('Latent covariance must be {}x{}.'.format(m, m))
            if np.max(np.abs(latent_cov - latent_cov.T)) > 1e-12 or np.linalg.eigvalsh(latent_cov)[0] < -1e-10:
                raise InvalidInputError('Latent covariance must be symmetric positive semidefinite.')

        self.origin = origin
        self.basis = basis
        self.latent_cov = latent_cov
        self.dim = d

    @property
    def rank(self):
        return self.basis.shape[1]

    def latent(self, x):
        return (np.asarray(x, dtype=float) - self.origin) @ self.basis

    def project(self, x):
        return self.origin + self.latent(x) @ self.basis.T

    def off_span_residual(self, x):
        """
        Norm of the component of x - o orthogonal to span(B).
        """
        r = np.asarray(x, dtype=float) - self.project(x)
        return np.linalg.norm(r, axis=-1)

    def denoise_impl(self, x_t, t, s):
        ab = s.alpha_bar_at(t)
        s2 = s.sigma_at(t) ** 2
        v = self.latent(x_t / np.sqrt(ab))
        if self.latent_cov is not None:
            # z = L (L + s2 I)^-1 v
            A = self.latent_cov + s2 * np.eye(self.rank)
            v = np.linalg.solve(A, v.T).T @ self.latent_cov
        return self.origin + v @ self.basis.T

    def sample(self, n, rng):
        if self.latent_cov is None:
            raise InvalidInputError('Cannot sample a subspace prior with infinite latent variance.')
        z = rng.multivariate_normal(np.zeros(self.rank), self.latent_cov, size=n, method='eigh')
        return self.origin + z @ self.basis.T

    def log_pdf(self, x):
        """
        Log density of the latent coordinates; only meaningful on the subspace.
        """
        if self.latent_cov is None:
            raise InvalidInputError('Subspace prior with infinite latent variance has no density.')
        return multivariate_normal.logpdf(self.latent(x), mean=np.zeros(self.rank), cov=self.latent_cov, allow_singular=True)

    def to_gaussian_mixture(self):
        """
        Returns the equivalent rank-deficient Gaussian embedded in R^d.
        """
        if self.latent_cov is None:
            raise InvalidInputError('Subspace prior with infinite latent variance has no Gaussian equivalent.')
        cov = self.basis @ self.latent_cov @ self.basis.T
        cov = 0.5 * (cov + cov.T)
        return GaussianMixturePrior(weights=[1.0], means=[self.origin], covs=[cov])

    def to_dict(self):
        d = super().to_dict()
        d['origin'] = self.origin.tolist()
        d['basis'] = self.basis.tolist()
        d['latent_cov'] = self.latent_cov.tolist() if self.latent_cov is not None else None
        return d

    def init_from_dict(self, d):
        self.set_params(d.get('origin'), d['basis'], d.get('latent_cov'))

def subspace_denoise(x_t, t, prior, s):
    return prior.denoise(x_t, t, s)
