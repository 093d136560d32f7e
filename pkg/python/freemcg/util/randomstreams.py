import numpy as np

from ..constants import Constants
from ..errors import InvalidInputError

class RandomStreams():
    """
    Derives independent random generators from a single master seed. Each
    generator is identified by a purpose name and a tuple of non-negative
    integer indices (e.g. timestep and particle index), so that changing
    the number of particles does not perturb unrelated draws.
    """

    def __init__(self, seed=None, orig=None):
        if isinstance(orig, RandomStreams):
            self.seed = orig.seed
        else:
            if seed is None:
                seed = 0
            seed = int(seed)
            if seed < 0 or seed > 0xFFFFFFFFFFFFFFFF:
                raise InvalidInputError('Random seed must be a 64-bit unsigned value, got {}.'.format(seed))
            self.seed = seed

    def copy(self):
        return type(self)(orig=self)

    @staticmethod
    def get_purpose_id(purpose):
        if isinstance(purpose, str):
            if purpose not in Constants.RANDOM_PURPOSES:
                raise InvalidInputError('Unknown random stream purpose `{}`.'.format(purpose))
            return Constants.RANDOM_PURPOSES[purpose]
        else:
            return int(purpose)

    def get_seed_sequence(self, purpose, *indices):
        key = (RandomStreams.get_purpose_id(purpose),) + tuple(int(i) for i in indices)
        return np.random.SeedSequence(self.seed, spawn_key=key)

    def rng(self, purpose, *indices):
        """
        Returns the generator owned by `(purpose, *indices)`. Calling it twice
        with the same key returns generators producing identical streams.
        """
        return np.random.default_rng(self.get_seed_sequence(purpose, *indices))

    def standard_normal(self, purpose, shape, *indices):
        return self.rng(purpose, *indices).standard_normal(shape)

    def particle_normal(self, purpose, count, shape, *indices):
        """
        Draws one standard normal array of `shape` per particle, each from its
        own stream keyed by `(purpose, *indices, k)`.
        """
        shape = tuple(np.atleast_1d(shape))
        eps = np.empty((count,) + shape)
        for k in range(count):
            eps[k] = self.rng(purpose, *indices, k).standard_normal(shape)
        return eps
