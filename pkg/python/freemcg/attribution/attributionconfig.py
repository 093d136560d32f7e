from ..constants import Constants
from ..errors import InvalidInputError
from ..freemcgobject import FreeMcgObject

class AttributionConfig(FreeMcgObject):
    """
    Settings of the FreeMCG feature attribution: the diffusion timestep grid,
    the number of particles per timestep, the master seed and the target
    class (None means the predicted class).
    """

    def __init__(self, timesteps=None, particles_per_t=None, seed=None, target_class=None,
                 random_t=None, normalize=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, AttributionConfig):
            self.timesteps = tuple(timesteps) if timesteps is not None else Constants.DEFAULT_ATTRIBUTION_TIMESTEPS
            self.particles_per_t = particles_per_t if particles_per_t is not None else Constants.DEFAULT_PARTICLES
            self.seed = seed if seed is not None else 0
            self.target_class = target_class
            self.random_t = random_t if random_t is not None else False
            self.normalize = normalize if normalize is not None else False
        else:
            self.timesteps = orig.timesteps
            self.particles_per_t = orig.particles_per_t
            self.seed = orig.seed
            self.target_class = orig.target_class
            self.random_t = orig.random_t
            self.normalize = orig.normalize

    def add_args(self, parser):
        parser.add_argument('--timesteps', type=int, nargs='+', help='Diffusion timesteps of the particle grid.\n')
        parser.add_argument('--particles', type=int, help='Number of particles per timestep.\n')
        parser.add_argument('--target-class', type=int, help='Class to explain, default is the prediction.\n')
        parser.add_argument('--random-t', action='store_true', help='Draw a random timestep for each particle.\n')
        parser.add_argument('--normalize', action='store_true', help='Rescale the map to a maximum of one.\n')

    def init_from_args(self, config, args):
        super().init_from_args(config, args)

        self.timesteps = tuple(self.get_arg('timesteps', self.timesteps, args))
        self.particles_per_t = self.get_arg('particles', self.particles_per_t, args)
        self.seed = self.get_arg('seed', self.seed, args)
        self.target_class = self.get_arg('target_class', self.target_class, args)
        self.random_t = self.get_arg('random_t', self.random_t, args)
        self.normalize = self.get_arg('normalize', self.normalize, args)

    def validate(self, s):
        if len(self.timesteps) == 0:
            raise InvalidInputError('At least one attribution timestep is required.')
        for t in self.timesteps:
            if int(t) != t or t < 0 or t >= s.T:
                raise InvalidInputError('Attribution timestep {} is out of range [0, {}).'.format(t, s.T))
        if len(set(self.timesteps)) != len(self.timesteps):
            raise InvalidInputError('Attribution timesteps must be distinct.')
        if self.particles_per_t < 2:
            raise InvalidInputError('At least two particles per timestep are required, got {}.'.format(self.particles_per_t))
