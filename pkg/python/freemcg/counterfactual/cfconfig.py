from ..constants import Constants
from ..errors import InvalidInputError
from ..freemcgobject import FreeMcgObject
from ..diffusion.ddim import DdimParams

class CfConfig(FreeMcgObject):
    """
    Settings of counterfactual generation. `grad_norm` left as None means
    normalized gradients for reverse diffusion and raw gradients for the
    direct ascents. Mode `gradient` is the oracle-gradient ascent baseline
    and ignores the particle and diffusion settings.
    """

    MODES = ['ascent', 'reverse', 'gradient']

    def __init__(self, target_class=None, alpha=None, beta=None, t_start=None, K=None, ddim=None,
                 n_ddim_steps=None, iters=None, grad_norm=None, seed=None, mode=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, CfConfig):
            self.target_class = target_class
            self.alpha = alpha if alpha is not None else Constants.DEFAULT_CF_ALPHA
            self.beta = beta if beta is not None else Constants.DEFAULT_CF_BETA
            self.t_start = t_start if t_start is not None else Constants.DEFAULT_CF_T_START
            self.K = K if K is not None else Constants.DEFAULT_PARTICLES
            self.ddim = ddim if ddim is not None else DdimParams()
            self.n_ddim_steps = n_ddim_steps if n_ddim_steps is not None else Constants.DEFAULT_DDIM_STEPS
            self.iters = iters if iters is not None else Constants.DEFAULT_CF_ITERS
            self.grad_norm = grad_norm
            self.seed = seed if seed is not None else 0
            self.mode = mode if mode is not None else 'reverse'
        else:
            self.target_class = orig.target_class
            self.alpha = orig.alpha
            self.beta = orig.beta
            self.t_start = orig.t_start
            self.K = orig.K
            self.ddim = orig.ddim.copy()
            self.n_ddim_steps = orig.n_ddim_steps
            self.iters = orig.iters
            self.grad_norm = orig.grad_norm
            self.seed = orig.seed
            self.mode = orig.mode

    def add_args(self, parser):
        parser.add_argument('--mode', type=str, choices=CfConfig.MODES, help='FreeMCG ascent, guided reverse diffusion or oracle-gradient ascent.\n')
        parser.add_argument('--target-class', type=int, help='Class the counterfactual should reach.\n')
        parser.add_argument('--alpha', type=float, help='Gradient step weight.\n')
        parser.add_argument('--beta', type=float, help='Proximal weight pulling towards the input.\n')
        parser.add_argument('--t-start', type=int, help='Forward diffusion depth.\n')
        parser.add_argument('--particles', type=int, help='Number of particles.\n')
        parser.add_argument('--ddim-steps', type=int, help='Number of reverse DDIM steps.\n')
        parser.add_argument('--iters', type=int, help='Number of ascent iterations.\n')
        parser.add_argument('--grad-norm', action='store_true', dest='grad_norm', default=None, help='Normalize the ensemble gradient.\n')
        parser.add_argument('--no-grad-norm', action='store_false', dest='grad_norm', default=None, help='Use the raw ensemble gradient.\n')
        self.ddim.add_args(parser)

    def init_from_args(self, config, args):
        super().init_from_args(config, args)

        self.mode = self.get_arg('mode', self.mode, args)
        self.target_class = self.get_arg('target_class', self.target_class, args)
        self.alpha = self.get_arg('alpha', self.alpha, args)
        self.beta = self.get_arg('beta', self.beta, args)
        self.t_start = self.get_arg('t_start', self.t_start, args)
        self.K = self.get_arg('particles', self.K, args)
        self.n_ddim_steps = self.get_arg('ddim_steps', self.n_ddim_steps, args)
        self.iters = self.get_arg('iters', self.iters, args)
        self.grad_norm = self.get_arg('grad_norm', self.grad_norm, args)
        self.seed = self.get_arg('seed', self.seed, args)
        self.ddim.init_from_args(config, args)

    def use_grad_norm(self, mode):
        if self.grad_norm is not None:
            return bool(self.grad_norm)
        return mode == 'reverse'

    def validate(self, s, n_classes):
        if self.mode not in CfConfig.MODES:
            raise InvalidInputError('Unknown counterfactual mode `{}`.'.format(self.mode))
        if self.target_class is None:
            raise InvalidInputError('Counterfactual target class is required.')
        if int(self.target_class) != self.target_class or not (0 <= self.target_class < n_classes):
            raise InvalidInputError('Target class {} is out of range [0, {}).'.format(self.target_class, n_classes))
        if self.alpha < 0 or self.beta < 0:
            raise InvalidInputError('Step weights alpha and beta must be nonnegative.')
        if s is not None and not (0 < self.t_start < s.T):
            raise InvalidInputError('Forward diffusion depth {} is out of range (0, {}).'.format(self.t_start, s.T))
        if self.K < 2:
            raise InvalidInputError('At least two particles are required, got {}.'.format(self.K))
        if self.iters < 0 or self.n_ddim_steps < 1:
            raise InvalidInputError('Iteration counts must be positive.')
        self.ddim.validate()
