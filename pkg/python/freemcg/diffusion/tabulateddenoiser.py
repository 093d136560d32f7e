import json
import numpy as np
from scipy.interpolate import RegularGridInterpolator

from ..setup_logger import logger
from ..errors import DataFileError, InvalidInputError
from ..freemcgobject import FreeMcgObject
from .denoiser import Denoiser

class TabulatedDenoiser(Denoiser):
    """
    Denoiser backed by posterior means precomputed on a tensor grid of x_t
    values, one table per timestep. Queries are interpolated linearly
    between grid nodes and clamped to the grid bounds. Only the tabulated
    timesteps can be queried.
    """

    def __init__(self, axes=None, timesteps=None, values=None):
        super().__init__()

        self.axes = None
        self.timesteps = None
        self.values = None
        self.interpolators = None

        if axes is not None:
            self.set_table(axes, timesteps, values)

    def set_table(self, axes, timesteps, values):
        """
        :param axes: List of d increasing 1-D grids.
        :param timesteps: Tabulated timesteps, without duplicates.
        :param values: Array of shape (len(timesteps), n_1, ..., n_d, d) with
            the posterior mean at every grid node.
        """
        axes = [np.asarray(a, dtype=float) for a in axes]
        timesteps = [int(t) for t in timesteps]
        values = np.asarray(values, dtype=float)
        d = len(axes)

        if d == 0 or any(a.ndim != 1 or a.shape[0] < 2 or np.any(np.diff(a) <= 0) for a in axes):
            raise InvalidInputError('Table axes must be strictly increasing with at least two nodes each.')
        if len(set(timesteps)) != len(timesteps) or len(timesteps) == 0:
            raise InvalidInputError('Tabulated timesteps must be nonempty and unique.')
        shape = (len(timesteps),) + tuple(a.shape[0] for a in axes) + (d,)
        if values.shape != shape:
            raise InvalidInputError('Table of shape {} does not match axes and timesteps, expected {}.'.format(
                values.shape, shape))
        if not np.all(np.isfinite(values)):
            raise InvalidInputError('Table values must be finite.')

        self.axes = axes
        self.timesteps = timesteps
        self.values = values
        self.dim = d
        self.interpolators = {t: RegularGridInterpolator(tuple(axes), values[i], method='linear')
                              for i, t in enumerate(timesteps)}

    @staticmethod
    def from_denoiser(den, s, axes, timesteps):
        """
        Tabulates another denoiser on the tensor grid spanned by the axes.
        """
        axes = [np.asarray(a, dtype=float) for a in axes]
        grid = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1)
        nodes = grid.reshape(-1, len(axes))
        values = np.stack([den.denoise(nodes, t, s).reshape(grid.shape) for t in timesteps])
        return TabulatedDenoiser(axes=axes, timesteps=timesteps, values=values)

    def denoise_impl(self, x_t, t, s):
        if t not in self.interpolators:
            raise InvalidInputError('Timestep {} is not tabulated, available: {}.'.format(t, self.timesteps))
        lo = np.array([a[0] for a in self.axes])
        hi = np.array([a[-1] for a in self.axes])
        return self.interpolators[t](np.clip(x_t, lo, hi))

    def to_dict(self):
        return {
            'axes': self.axes,
            'timesteps': self.timesteps,
            'values': self.values,
        }

    @staticmethod
    def load(filename):
        logger.info('Loading denoiser table from file {}'.format(filename))
        try:
            with open(filename, 'r') as f:
                d = json.load(f)
            return TabulatedDenoiser(axes=d['axes'], timesteps=d['timesteps'], values=d['values'])
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as ex:
            raise DataFileError('Cannot read denoiser table `{}`: {}'.format(filename, ex))

    def save(self, filename):
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, default=FreeMcgObject.save_json_default)
