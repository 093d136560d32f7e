import numpy as np

from ..errors import InvalidInputError

class Denoiser():
    """
    Posterior-mean map (x_t, t) -> E[x_0 | x_t] under a variance-preserving
    schedule. Implementations are deterministic and operate on batches of
    shape (m, d) or on single points of shape (d,).
    """

    def __init__(self, dim=None):
        self.dim = dim

    def check_input(self, x_t):
        x_t = np.asarray(x_t, dtype=float)
        if x_t.shape[-1] != self.dim:
            raise InvalidInputError('Denoiser `{}` expects dimension {}, got shape {}.'.format(
                type(self).__name__, self.dim, x_t.shape))
        if not np.all(np.isfinite(x_t)):
            raise InvalidInputError('Denoiser input must be finite.')
        return x_t

    def denoise(self, x_t, t, s):
        x_t = self.check_input(x_t)
        t = s.check_timestep(t)
        shape = x_t.shape
        x0 = self.denoise_impl(x_t.reshape(-1, self.dim), t, s)
        return x0.reshape(shape)

    def denoise_impl(self, x_t, t, s):
        raise NotImplementedError()

    def implied_eps(self, x_t, t, s, x0_hat=None):
        """
        Noise estimate consistent with the denoised estimate:
        eps = (x_t - sqrt(alpha_bar_t) x0) / sqrt(1 - alpha_bar_t).
        """
        x_t = self.check_input(x_t)
        if x0_hat is None:
            x0_hat = self.denoise(x_t, t, s)
        ab = s.alpha_bar_at(t)
        return (x_t - np.sqrt(ab) * x0_hat) / np.sqrt(1 - ab)
