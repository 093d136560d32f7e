import numpy as np

from ..errors import InvalidInputError

def forward_diffuse(x0, t, s, rng=None, eps=None):
    """
    Samples x_t = sqrt(alpha_bar_t) x0 + sqrt(1 - alpha_bar_t) eps with
    eps ~ N(0, I). Either a generator or the noise itself must be given.
    """
    x0 = np.asarray(x0, dtype=float)
    t = s.check_timestep(t)
    if eps is None:
        if rng is None:
            raise InvalidInputError('Forward diffusion needs a random generator or explicit noise.')
        eps = rng.standard_normal(x0.shape)
    ab = s.alpha_bar_at(t)
    return np.sqrt(ab) * x0 + np.sqrt(1 - ab) * eps

def forward_diffuse_particles(x0, t, s, streams, count, purpose='forward', indices=()):
    """
    Forward diffuses `count` copies of x0 to timestep t, each particle using
    its own random stream keyed by `(purpose, *indices, k)`.

    :return: Array of shape (count, d).
    """
    x0 = np.asarray(x0, dtype=float).reshape(-1)
    eps = streams.particle_normal(purpose, count, x0.shape, *indices)
    return forward_diffuse(x0[None, :], t, s, eps=eps)
