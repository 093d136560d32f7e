import numpy as np

from .scalarfield import ScalarField

class QuadraticToyField(ScalarField):
    """
    The two dimensional field f(x, y) = -x + y^2 with gradient (-1, 2y).
    """

    KIND = 'quadratic'

    def __init__(self):
        super().__init__(dim=2)

    def value(self, x):
        return -x[..., 0] + x[..., 1] ** 2

    def gradient(self, x):
        return np.array([-1.0, 2.0 * x[1]])
