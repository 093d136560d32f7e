import numpy as np

from ..errors import InvalidInputError

class AttributionMap():
    """
    Nonnegative importance map over the spatial layout of the input, with the
    signed gradient it was computed from.
    """

    def __init__(self, values=None, raw_gradient=None, layout=None, target_class=None, degenerate=False, orig=None):
        if isinstance(orig, AttributionMap):
            self.values = orig.values
            self.raw_gradient = orig.raw_gradient
            self.layout = orig.layout
            self.target_class = orig.target_class
            self.degenerate = orig.degenerate
        else:
            self.values = np.asarray(values, dtype=float)
            self.raw_gradient = None if raw_gradient is None else np.asarray(raw_gradient, dtype=float)
            self.layout = tuple(layout) if layout is not None else self.values.shape
            self.target_class = target_class
            self.degenerate = degenerate

            if not np.all(np.isfinite(self.values)) or np.any(self.values < 0):
                raise InvalidInputError('Attribution values must be finite and nonnegative.')

    def copy(self):
        return type(self)(orig=self)

    @property
    def shape(self):
        return self.values.shape

    def normalized(self):
        """
        Returns a copy rescaled to a maximum of one. All-zero maps are kept.
        """
        m = self.copy()
        mx = np.max(self.values) if self.values.size > 0 else 0.0
        if mx > 0:
            m.values = self.values / mx
        return m

    def to_dict(self):
        return {
            'layout': list(self.layout),
            'target_class': self.target_class,
            'degenerate': bool(self.degenerate),
            'max': float(np.max(self.values)) if self.values.size > 0 else 0.0,
            'sum': float(np.sum(self.values)),
        }
