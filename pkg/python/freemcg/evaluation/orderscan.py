import numpy as np
import pandas as pd

from ..setup_logger import logger
from ..constants import Constants
from ..errors import InvalidInputError
from ..enkf import ParticleEnsemble, thm2_residual

# Shifted simplex, the third central moment does not vanish
DEFAULT_BASE_OFFSETS = np.array([
    [1.0, 0.0],
    [-0.5, 0.866],
    [-0.5, -0.866],
    [0.3, 0.2],
])

DEFAULT_CENTER = np.array([0.3, 0.5])

class OrderScanReport():
    """
    Residuals of the first-order ensemble approximation for a shrinking
    ensemble and the fitted log-log slope. When any residual is below the
    floor the slope is undefined: it is NaN and `exact` is set.
    """

    def __init__(self, deltas=None, residuals=None, slope=None, exact=False):
        self.deltas = np.asarray(deltas, dtype=float)
        self.residuals = np.asarray(residuals, dtype=float)
        self.slope = slope
        self.exact = exact

    def to_dict(self):
        return {
            'deltas': self.deltas.tolist(),
            'residuals': self.residuals.tolist(),
            'slope': None if self.slope is None or np.isnan(self.slope) else float(self.slope),
            'exact': bool(self.exact),
        }

    def to_dataframe(self):
        return pd.DataFrame({'delta': self.deltas, 'residual': self.residuals})

def fit_slope(deltas, residuals):
    return float(np.polyfit(np.log(deltas), np.log(residuals), 1)[0])

def order_scan(m, base_offsets=None, deltas=None, center=None):
    """
    Scales a fixed ensemble of offsets around a center by each delta,
    evaluates the residual of the first-order ensemble approximation and
    fits the slope of log residual against log delta.

    :param m: OracleClassifier.
    :param base_offsets: Array of shape (K, d).
    :param deltas: Strictly decreasing positive scales.
    :param center: Ensemble center, length d.
    """

    base_offsets = DEFAULT_BASE_OFFSETS if base_offsets is None else np.atleast_2d(np.asarray(base_offsets, dtype=float))
    deltas = np.asarray(deltas if deltas is not None else Constants.DEFAULT_ORDER_SCAN_DELTAS, dtype=float)
    if center is None:
        center = DEFAULT_CENTER if base_offsets.shape[1] == 2 else np.zeros(base_offsets.shape[1])
    center = np.asarray(center, dtype=float)

    if deltas.ndim != 1 or deltas.shape[0] < 2 or np.any(deltas <= 0) or np.any(np.diff(deltas) >= 0):
        raise InvalidInputError('Scan scales must be positive and strictly decreasing.')
    if base_offsets.shape[1] != m.dim_in or center.shape != (m.dim_in,):
        raise InvalidInputError('Scan ensemble does not match the classifier dimension.')

    residuals = np.empty(deltas.shape[0])
    for i, d in enumerate(deltas):
        particles = center + d * base_offsets
        residuals[i] = thm2_residual(m, ParticleEnsemble.from_classifier(m, particles))

    if np.any(residuals <= Constants.RESIDUAL_FLOOR):
        logger.info('Ensemble approximation is exact within the residual floor, slope undefined.')
        return OrderScanReport(deltas, residuals, slope=np.nan, exact=True)

    slope = fit_slope(deltas, residuals)
    logger.debug('Order scan residuals {}, slope {:.3f}'.format(residuals, slope))
    return OrderScanReport(deltas, residuals, slope=slope, exact=False)
