import numpy as np

from ..errors import InvalidInputError
from ..util.linalg import gram_schmidt

class TangentReport():
    """
    Alignment of a vector with a tangent space: the relative norm of its
    off-tangent component and its angle to the tangent projection.
    """

    def __init__(self, off_manifold_ratio=None, angle_deg=None):
        self.off_manifold_ratio = off_manifold_ratio
        self.angle_deg = angle_deg

    def to_dict(self):
        return {
            'off_manifold_ratio': self.off_manifold_ratio,
            'angle_deg': self.angle_deg,
        }

def tangent_alignment(g, basis):
    """
    :param g: Vector of length d.
    :param basis: Array of shape (d, m) spanning the tangent space, not
        necessarily orthonormal.
    """
    g = np.asarray(g, dtype=float)
    basis = np.asarray(basis, dtype=float)
    if basis.ndim == 1:
        basis = basis[:, None]
    if basis.shape[0] != g.shape[0]:
        raise InvalidInputError('Tangent basis of shape {} does not match vector of length {}.'.format(basis.shape, g.shape[0]))

    q = gram_schmidt(basis.T)
    n = np.linalg.norm(g)
    if n == 0:
        return TangentReport(off_manifold_ratio=0.0, angle_deg=0.0)

    proj = q.T @ (q @ g)
    off = np.linalg.norm(g - proj)
    ratio = float(min(off / n, 1.0))
    angle = float(np.degrees(np.arctan2(off, np.linalg.norm(proj))))
    return TangentReport(off_manifold_ratio=ratio, angle_deg=angle)

def tangent_report(g, prior):
    """
    Alignment of g with span(B) of an AffineSubspacePrior.
    """
    return tangent_alignment(g, prior.basis)
