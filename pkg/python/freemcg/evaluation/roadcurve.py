import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from ..setup_logger import logger
from ..constants import Constants
from ..errors import InvalidInputError
from ..util.randomstreams import RandomStreams
from ..models.softmax import softmax
from .imputation import as_grid, noisy_linear_impute

class RoadCurve():
    """
    Score of the originally predicted class as a function of the fraction of
    pixels removed in order of attributed importance. Lower area is better.
    """

    def __init__(self, fractions=None, scores=None, predicted_class=None, orig=None):
        if isinstance(orig, RoadCurve):
            self.fractions = orig.fractions
            self.scores = orig.scores
            self.predicted_class = orig.predicted_class
            self.auc = orig.auc
        else:
            self.fractions = np.asarray(fractions, dtype=float)
            self.scores = np.asarray(scores, dtype=float)
            self.predicted_class = predicted_class
            self.auc = float(trapezoid(self.scores, self.fractions))

    def to_dataframe(self):
        return pd.DataFrame({'fraction': self.fractions, 'score': self.scores})

    def to_dict(self):
        return {
            'fractions': self.fractions.tolist(),
            'scores': self.scores.tolist(),
            'predicted_class': self.predicted_class,
            'auc': self.auc,
        }

def check_fractions(fractions):
    fractions = np.asarray(fractions, dtype=float)
    if fractions.ndim != 1 or fractions.shape[0] < 1:
        raise InvalidInputError('Removal fractions must be a nonempty list.')
    if np.any(fractions < 0) or np.any(fractions >= 1) or np.any(np.diff(fractions) <= 0):
        raise InvalidInputError('Removal fractions must be strictly increasing in [0, 1).')
    return fractions

def removal_order(values):
    """
    Pixel indices sorted by decreasing importance, ties broken by index.
    """
    return np.argsort(-np.asarray(values, dtype=float).reshape(-1), kind='stable')

def road_curve(m, x, amap, fractions=None, noise_std=Constants.DEFAULT_ROAD_NOISE_STD, seed=None, streams=None):
    """
    Removes the most important pixels for each fraction, imputes them with
    noisy linear imputation and records the probability of the class the
    model predicted for the untouched input.

    :param m: Black-box classifier over the flattened input.
    :param x: Input array, vector or image.
    :param amap: AttributionMap or array over the spatial layout of x.
    """

    fractions = check_fractions(fractions if fractions is not None else Constants.DEFAULT_ROAD_FRACTIONS)
    streams = streams if streams is not None else RandomStreams(seed)

    x = np.asarray(x, dtype=float)
    grid = as_grid(x)
    h, w, _ = grid.shape
    values = np.asarray(getattr(amap, 'values', amap), dtype=float)
    if values.size != h * w:
        raise InvalidInputError('Attribution map of shape {} does not match input of shape {}.'.format(values.shape, x.shape))

    c = m.predict(x.reshape(-1))
    order = removal_order(values)
    scores = np.empty(fractions.shape[0])
    for i, f in enumerate(fractions):
        n = int(round(f * h * w))
        mask = np.zeros(h * w, dtype=bool)
        mask[order[:n]] = True
        xi = noisy_linear_impute(x, mask.reshape(h, w), noise_std=noise_std, rng=streams.rng('road', i))
        scores[i] = softmax(m.eval(xi.reshape(-1)))[c]

    curve = RoadCurve(fractions, scores, predicted_class=int(c))
    logger.debug('ROAD curve for class {}: AUC={:.4f}'.format(c, curve.auc))
    return curve
