import numpy as np

from ..setup_logger import logger
from ..constants import Constants
from ..errors import InvalidInputError
from ..freemcgobject import FreeMcgObject

class NoiseSchedule(FreeMcgObject):
    """
    Discrete variance-preserving diffusion timeline with a linear beta
    schedule. Timesteps are indexed 0..T-1; index -1 denotes clean data with
    alpha_bar = 1.
    """

    def __init__(self, T=None, beta_min=None, beta_max=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, NoiseSchedule):
            self.T = T if T is not None else Constants.DEFAULT_T
            self.beta_min = beta_min if beta_min is not None else Constants.DEFAULT_BETA_MIN
            self.beta_max = beta_max if beta_max is not None else Constants.DEFAULT_BETA_MAX
        else:
            self.T = orig.T
            self.beta_min = orig.beta_min
            self.beta_max = orig.beta_max

        self.beta = None
        self.alpha_bar = None
        self.sigma = None
        self.tilde_beta = None

        self.build()

    def add_args(self, parser):
        parser.add_argument('--T', type=int, help='Number of diffusion timesteps.\n')
        parser.add_argument('--beta-min', type=float, help='First beta of the linear schedule.\n')
        parser.add_argument('--beta-max', type=float, help='Last beta of the linear schedule.\n')

    def init_from_args(self, config, args):
        super().init_from_args(config, args)

        self.T = self.get_arg('T', self.T, args)
        self.beta_min = self.get_arg('beta_min', self.beta_min, args)
        self.beta_max = self.get_arg('beta_max', self.beta_max, args)

        self.build()

    def build(self):
        if int(self.T) != self.T or self.T < 2:
            raise InvalidInputError('Number of timesteps must be at least 2, got {}.'.format(self.T))
        if not (0 < self.beta_min <= self.beta_max < 1):
            raise InvalidInputError('Invalid beta range [{}, {}].'.format(self.beta_min, self.beta_max))

        self.T = int(self.T)
        self.beta = np.linspace(self.beta_min, self.beta_max, self.T)
        self.alpha_bar = np.cumprod(1.0 - self.beta)
        self.sigma = np.sqrt((1.0 - self.alpha_bar) / self.alpha_bar)

        self.tilde_beta = np.zeros(self.T)
        ab, ab_prev = self.alpha_bar[1:], self.alpha_bar[:-1]
        self.tilde_beta[1:] = np.sqrt((1 - ab_prev) / (1 - ab)) * np.sqrt(1 - ab / ab_prev)

        for a in [self.beta, self.alpha_bar, self.sigma, self.tilde_beta]:
            a.setflags(write=False)

        logger.debug('Built linear noise schedule with T={}, beta=[{}, {}], alpha_bar[T-1]={:.3e}'.format(
            self.T, self.beta_min, self.beta_max, self.alpha_bar[-1]))

    def check_timestep(self, t, allow_clean=False):
        if int(t) != t:
            raise InvalidInputError('Timestep must be an integer, got {}.'.format(t))
        t = int(t)
        lo = -1 if allow_clean else 0
        if t < lo or t >= self.T:
            raise InvalidInputError('Timestep {} is out of range [{}, {}).'.format(t, lo, self.T))
        return t

    def alpha_bar_at(self, t):
        t = self.check_timestep(t, allow_clean=True)
        return 1.0 if t < 0 else float(self.alpha_bar[t])

    def sigma_at(self, t):
        t = self.check_timestep(t, allow_clean=True)
        return 0.0 if t < 0 else float(self.sigma[t])

    def tilde_beta_between(self, t, t_prev):
        """
        DDPM posterior standard deviation between timestep t and an earlier
        timestep t_prev of a (possibly strided) sub-grid.
        """
        ab = self.alpha_bar_at(t)
        ab_prev = self.alpha_bar_at(t_prev)
        if ab_prev <= ab:
            raise InvalidInputError('Timestep {} must precede timestep {}.'.format(t_prev, t))
        return float(np.sqrt((1 - ab_prev) / (1 - ab)) * np.sqrt(1 - ab / ab_prev))

    def get_ddim_timesteps(self, t_start, n_steps):
        """
        Uniformly spaced decreasing timesteps from t_start down to 0. A
        reverse pass steps from each entry to the next and from the last one
        to the clean index -1.
        """
        t_start = self.check_timestep(t_start)
        if n_steps < 1:
            raise InvalidInputError('Number of DDIM steps must be positive.')
        ts = np.round(np.linspace(t_start, 0, int(n_steps))).astype(int)
        ts = np.unique(ts)[::-1]
        if ts.shape[0] < n_steps:
            logger.debug('DDIM sub-grid reduced to {} unique timesteps.'.format(ts.shape[0]))
        return ts

def make_schedule(T=Constants.DEFAULT_T, beta_min=Constants.DEFAULT_BETA_MIN, beta_max=Constants.DEFAULT_BETA_MAX):
    return NoiseSchedule(T=T, beta_min=beta_min, beta_max=beta_max)
