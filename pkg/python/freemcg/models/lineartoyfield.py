import numpy as np

from .scalarfield import ScalarField

class LinearToyField(ScalarField):
    """
    Affine field f(x) = a . x + c.
    """

    KIND = 'linear'

    def __init__(self, a=None, c=0.0):
        a = np.array([-1.0, 0.0]) if a is None else np.asarray(a, dtype=float)
        super().__init__(dim=a.shape[0])
        self.a = a
        self.c = float(c)

    def value(self, x):
        return x @ self.a + self.c

    def gradient(self, x):
        return self.a.copy()

    def to_dict(self):
        return {'field': self.KIND, 'a': self.a.tolist(), 'c': self.c}
