import numpy as np

from ..constants import Constants

def gram_schmidt(vectors, tol=Constants.GRAM_SCHMIDT_DROP_TOL):
    """
    Orthonormalizes the rows of `vectors` with modified Gram-Schmidt and a
    second re-orthogonalization pass. Vectors whose remaining norm falls
    below `tol` times the largest input norm are dropped.

    :param vectors: Array of shape (k, d).
    :param tol: Relative drop threshold.
    :return: Orthonormal basis of shape (m, d) with m <= min(k, d).
    """

    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    d = vectors.shape[1]
    scale = np.max(np.linalg.norm(vectors, axis=1)) if vectors.shape[0] > 0 else 0.0
    if scale == 0.0:
        return np.zeros((0, d))

    basis = []
    for v in vectors:
        w = v.copy()
        for _ in range(2):
            for q in basis:
                w -= np.dot(q, w) * q
        n = np.linalg.norm(w)
        if n > tol * scale:
            basis.append(w / n)
        if len(basis) == d:
            break

    if len(basis) == 0:
        return np.zeros((0, d))
    return np.stack(basis)

def span_residual(basis, v):
    """
    Returns the norm of the component of `v` orthogonal to the span of the
    orthonormal rows of `basis`, relative to the norm of `v`. Zero vectors
    have zero residual.
    """

    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        return 0.0
    if basis.shape[0] == 0:
        return 1.0
    r = v - basis.T @ (basis @ v)
    return float(np.linalg.norm(r) / n)
