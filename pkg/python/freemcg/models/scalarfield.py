import numpy as np

class ScalarField():
    """
    Scalar function f: R^d -> R with an analytic gradient.
    """

    KIND = None

    def __init__(self, dim=None):
        self.dim = dim

    def value(self, x):
        """
        Evaluates the field on a batch of points of shape (m, d).
        """
        raise NotImplementedError()

    def gradient(self, x):
        raise NotImplementedError()

    def to_dict(self):
        return {'field': self.KIND}
