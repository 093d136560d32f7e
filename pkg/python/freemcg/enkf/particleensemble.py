import numpy as np

from ..errors import InvalidInputError

class ParticleEnsemble():
    """
    K particles in R^d together with the cached logits f(x^(k)).
    """

    def __init__(self, particles=None, logits=None, orig=None):
        if isinstance(orig, ParticleEnsemble):
            self.particles = orig.particles
            self.logits = orig.logits
        else:
            particles = np.atleast_2d(np.asarray(particles, dtype=float))
            logits = np.atleast_2d(np.asarray(logits, dtype=float))
            if particles.shape[0] < 1:
                raise InvalidInputError('Ensemble must contain at least one particle.')
            if particles.shape[0] != logits.shape[0]:
                raise InvalidInputError('Ensemble has {} particles but {} logit vectors.'.format(
                    particles.shape[0], logits.shape[0]))
            if not np.all(np.isfinite(particles)) or not np.all(np.isfinite(logits)):
                raise InvalidInputError('Ensemble entries must be finite.')
            self.particles = particles
            self.logits = logits

    def copy(self):
        return type(self)(orig=self)

    @staticmethod
    def from_classifier(m, particles):
        """
        Builds an ensemble by evaluating the black-box classifier on each particle.
        """
        particles = np.atleast_2d(np.asarray(particles, dtype=float))
        return ParticleEnsemble(particles, m.eval(particles))

    @property
    def K(self):
        return self.particles.shape[0]

    @property
    def dim(self):
        return self.particles.shape[1]

    @property
    def classes(self):
        return self.logits.shape[1]

    def mean_x(self):
        return np.mean(self.particles, axis=0)

    def mean_f(self):
        return np.mean(self.logits, axis=0)

    def deviations_x(self):
        return self.particles - self.mean_x()

    def deviations_f(self):
        return self.logits - self.mean_f()

    def is_degenerate(self):
        """
        True when all particles coincide.
        """
        return not np.any(self.particles != self.particles[0])

