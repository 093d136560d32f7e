import numpy as np

from ..errors import DataFileError
from .oracleclassifier import OracleClassifier
from .quadratictoyfield import QuadraticToyField
from .lineartoyfield import LinearToyField

class ScalarToyWrapper(OracleClassifier):
    """
    Lifts a scalar field to the two-class logits [f(x), 0] so that toy fields
    go through the same softmax pipeline as real classifiers.
    """

    KIND = 'toy'

    def __init__(self, field=None, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, ScalarToyWrapper):
            self.field = None
            if field is not None:
                self.set_field(field)
        else:
            self.field = orig.field

    def set_field(self, field):
        self.field = field
        self.dim_in = field.dim
        self.dim_out = 2

    def eval_impl(self, x):
        f = self.field.value(x)
        return np.stack([f, np.zeros_like(f)], axis=-1)

    def jacobian_impl(self, x):
        return np.stack([self.field.gradient(x), np.zeros(self.dim_in)])

    def to_dict(self):
        d = super().to_dict()
        d.update(self.field.to_dict())
        return d

    def init_from_dict(self, d):
        kind = d.get('field', QuadraticToyField.KIND)
        if kind == QuadraticToyField.KIND:
            self.set_field(QuadraticToyField())
        elif kind == LinearToyField.KIND:
            self.set_field(LinearToyField(d.get('a'), d.get('c', 0.0)))
        else:
            raise DataFileError('Unknown toy field `{}`.'.format(kind))
