import numpy as np

from ..setup_logger import logger
from ..constants import Constants
from ..errors import InvalidInputError, NumericalError
from ..freemcgobject import FreeMcgObject
from .forward import forward_diffuse_particles

class DdimParams(FreeMcgObject):
    """
    Stochasticity eta and guidance scale of the guided DDIM update. When no
    explicit gamma table is given, gamma_t = sqrt(alpha_bar_t alpha_bar_{t-1}).
    """

    def __init__(self, eta=None, gamma=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, DdimParams):
            self.eta = eta if eta is not None else Constants.DEFAULT_DDIM_ETA
            self.gamma = gamma
        else:
            self.eta = orig.eta
            self.gamma = orig.gamma

        self.validate()

    def add_args(self, parser):
        parser.add_argument('--eta', type=float, help='DDIM stochasticity.\n')

    def init_from_args(self, config, args):
        super().init_from_args(config, args)
        self.eta = self.get_arg('eta', self.eta, args)
        self.validate()

    def validate(self):
        if not (0 <= self.eta <= 1):
            raise InvalidInputError('DDIM eta must be in [0, 1], got {}.'.format(self.eta))
        if self.gamma is not None:
            self.gamma = np.asarray(self.gamma, dtype=float)
            if not np.all(np.isfinite(self.gamma)):
                raise InvalidInputError('Guidance scales must be finite.')

    def gamma_at(self, s, t, t_prev=None):
        t_prev = t - 1 if t_prev is None else t_prev
        if self.gamma is not None:
            return float(self.gamma[t])
        return guidance_scale(s.alpha_bar_at(t), s.alpha_bar_at(t_prev))

def guidance_scale(alpha_bar_t, alpha_bar_prev):
    return float(np.sqrt(alpha_bar_t * alpha_bar_prev))

def ddim_step(x_t, x0_hat, eps_hat, t, s, p, g=None, rng=None, t_prev=None, noise=None):
    """
    One guided DDIM update from timestep t to t_prev (default t - 1):

        x_prev = sqrt(ab_prev) x0 + sqrt(1 - ab_prev - eta^2 tb^2) eps_hat
                 + eta tb eps + gamma_t g

    :param noise: Standard normal noise of the shape of x_t, drawn from `rng`
        when not given. Only needed when eta > 0.
    """

    t = s.check_timestep(t)
    if t_prev is None:
        if t < 1:
            raise InvalidInputError('Default DDIM step requires t >= 1.')
        t_prev = t - 1
    t_prev = s.check_timestep(t_prev, allow_clean=True)
    if t_prev >= t:
        raise InvalidInputError('DDIM steps must go backward in time.')

    ab_prev = s.alpha_bar_at(t_prev)
    tb = s.tilde_beta_between(t, t_prev)

    radicand = 1 - ab_prev - p.eta ** 2 * tb ** 2
    if radicand < 0:
        if radicand < -1e-12:
            raise NumericalError('Negative DDIM radicand {} at t={}; reduce eta.'.format(radicand, t))
        radicand = 0.0

    x_prev = np.sqrt(ab_prev) * x0_hat + np.sqrt(radicand) * eps_hat
    if p.eta > 0:
        if noise is None:
            if rng is None:
                raise InvalidInputError('Stochastic DDIM step needs a random generator or explicit noise.')
            noise = rng.standard_normal(np.shape(x_t))
        x_prev = x_prev + p.eta * tb * noise
    if g is not None:
        x_prev = x_prev + p.gamma_at(s, t, t_prev) * g

    return x_prev

def unguided_reverse_diffusion(den, s, x_start, t_start, n_steps, p=None, streams=None, purpose='ddim'):
    """
    Runs an unguided DDIM reverse pass from x_start at timestep t_start down
    to clean data. x_start is a batch of shape (m, d); when eta > 0 each row
    draws its noise from its own stream keyed by (purpose, t, row).
    """

    p = p if p is not None else DdimParams()
    x = np.atleast_2d(np.asarray(x_start, dtype=float)).copy()
    ts = s.get_ddim_timesteps(t_start, n_steps)
    for i, t in enumerate(ts):
        t_prev = ts[i + 1] if i + 1 < ts.shape[0] else -1
        x0 = den.denoise(x, t, s)
        eps = den.implied_eps(x, t, s, x0_hat=x0)
        noise = None
        if p.eta > 0:
            noise = streams.particle_normal(purpose, x.shape[0], x.shape[1], t)
        x = ddim_step(x, x0, eps, t, s, p, noise=noise, t_prev=t_prev)
    logger.debug('Finished unguided reverse pass of {} steps from t={}.'.format(ts.shape[0], t_start))
    return x

def sdedit_reconstruction(den, s, x, t_start, n_steps, count, streams, p=None):
    """
    Forward diffuses `count` particles of x to t_start and runs the unguided
    reverse pass on them.
    """

    xt = forward_diffuse_particles(x, t_start, s, streams, count, purpose='reverse')
    return unguided_reverse_diffusion(den, s, xt, t_start, n_steps, p=p, streams=streams)
