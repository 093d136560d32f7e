import numpy as np
import pandas as pd

from ..models import QuadraticToyField, ScalarToyWrapper
from ..enkf import ParticleEnsemble, freemcg_covariance_gradient
from .tangent import tangent_alignment

class TangentToyReport():
    """
    Per-point comparison of the ensemble gradient and the raw gradient of
    the quadratic toy field against the tangent of a curve manifold.
    """

    def __init__(self, points=None, tangents=None, free_gradients=None, raw_gradients=None):
        self.points = np.asarray(points)
        self.tangents = np.asarray(tangents)
        self.free_gradients = np.asarray(free_gradients)
        self.raw_gradients = np.asarray(raw_gradients)

        self.free = [tangent_alignment(g, t) for g, t in zip(self.free_gradients, self.tangents)]
        self.raw = [tangent_alignment(g, t) for g, t in zip(self.raw_gradients, self.tangents)]

    @property
    def free_angles(self):
        return np.array([r.angle_deg for r in self.free])

    @property
    def raw_angles(self):
        return np.array([r.angle_deg for r in self.raw])

    @property
    def free_ratios(self):
        return np.array([r.off_manifold_ratio for r in self.free])

    def to_dataframe(self):
        return pd.DataFrame({
            'x': self.points[:, 0],
            'y': self.points[:, 1],
            'tangent_x': self.tangents[:, 0],
            'tangent_y': self.tangents[:, 1],
            'free_x': self.free_gradients[:, 0],
            'free_y': self.free_gradients[:, 1],
            'raw_x': self.raw_gradients[:, 0],
            'raw_y': self.raw_gradients[:, 1],
            'free_angle': self.free_angles,
            'raw_angle': self.raw_angles,
            'free_ratio': self.free_ratios,
        })

    def to_dict(self):
        return {
            'max_free_angle': float(np.max(self.free_angles)),
            'max_free_ratio': float(np.max(self.free_ratios)),
            'min_raw_angle': float(np.min(self.raw_angles)),
            'free_below_raw': bool(np.all(self.free_angles < self.raw_angles)),
        }

def tangent_toy(kappa=1.0, positions=None, delta=0.05, K=21):
    """
    Places K particles on the curve y = kappa x^2 within +-delta of each
    position, computes the ensemble gradient of f = -x + y^2 and compares it
    with the raw gradient (-1, 2y) against the tangent (1, 2 kappa x).
    kappa = 0 gives the horizontal line manifold.
    """

    positions = np.linspace(0.1, 1.0, 10) if positions is None else np.asarray(positions, dtype=float)
    m = ScalarToyWrapper(QuadraticToyField())
    offsets = delta * np.linspace(-1.0, 1.0, K)
    w = np.array([1.0, 0.0])

    points, tangents, free, raw = [], [], [], []
    for x0 in positions:
        s = x0 + offsets
        particles = np.stack([s, kappa * s ** 2], axis=-1)
        e = ParticleEnsemble.from_classifier(m, particles)
        p = np.array([x0, kappa * x0 ** 2])
        points.append(p)
        tangents.append(np.array([1.0, 2 * kappa * x0]))
        free.append(freemcg_covariance_gradient(e, w))
        raw.append(m.field.gradient(p))

    return TangentToyReport(points, tangents, free, raw)
