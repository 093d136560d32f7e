import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

from ..setup_logger import logger
from ..errors import InvalidInputError

NEIGHBORS = ((-1, 0), (1, 0), (0, -1), (0, 1))

def as_grid(x):
    """
    Views x as an (H, W, C) grid. Vectors become a single row, grayscale
    images get a channel axis.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        return x[None, :, None]
    elif x.ndim == 2:
        return x[:, :, None]
    elif x.ndim == 3:
        return x
    else:
        raise InvalidInputError('Expected a vector or an image, got shape {}.'.format(x.shape))

def neighbor_system(mask):
    """
    Sparse system whose solution assigns every removed pixel the mean of its
    4-neighbors within the grid, with known pixels as boundary data.

    :return: (A, rows, cols, vals) where A is the matrix over the removed
        pixels and (rows, cols, vals) map known neighbor pixels to the
        right-hand side.
    """
    h, w = mask.shape
    idx = -np.ones(mask.shape, dtype=int)
    removed = np.argwhere(mask)
    idx[mask] = np.arange(removed.shape[0])

    ai, aj, av = [], [], []
    bi, bp = [], []
    for n, (r, c) in enumerate(removed):
        count = 0
        for dr, dc in NEIGHBORS:
            rr, cc = r + dr, c + dc
            if 0 <= rr < h and 0 <= cc < w:
                count += 1
                if mask[rr, cc]:
                    ai.append(n)
                    aj.append(idx[rr, cc])
                    av.append(-1.0)
                else:
                    bi.append(n)
                    bp.append(rr * w + cc)
        ai.append(n)
        aj.append(n)
        av.append(float(count))

    m = removed.shape[0]
    A = coo_matrix((av, (ai, aj)), shape=(m, m)).tocsc()
    return A, removed, np.array(bi, dtype=int), np.array(bp, dtype=int)

def noisy_linear_impute(x, mask, noise_std=0.05, rng=None):
    """
    Replaces the masked pixels of x by the harmonic interpolation of the
    remaining ones and adds Gaussian noise to the replaced pixels only.

    :param x: Vector (N,), grayscale (H, W) or channels-last (H, W, C) image.
    :param mask: Boolean array of the spatial shape, True where removed.
    :param noise_std: Standard deviation of the added noise.
    :param rng: numpy Generator, required when noise_std > 0.
    :return: Imputed array of the shape of x.
    """

    x = np.asarray(x, dtype=float)
    grid = as_grid(x)
    h, w, ch = grid.shape
    mask = np.asarray(mask, dtype=bool).reshape(h, w)
    if noise_std < 0:
        raise InvalidInputError('Imputation noise must be nonnegative.')
    if noise_std > 0 and rng is None:
        raise InvalidInputError('Noisy imputation needs a random generator.')

    out = grid.copy()
    m = int(mask.sum())
    if m == 0:
        return x.copy()

    if m == h * w:
        logger.debug('Image fully masked, imputing the global mean.')
        out[:] = np.mean(grid, axis=(0, 1))
    else:
        A, removed, bi, bp = neighbor_system(mask)
        flat = grid.reshape(-1, ch)
        rhs = np.zeros((m, ch))
        np.add.at(rhs, bi, flat[bp])
        u = spsolve(A, rhs)
        out[removed[:, 0], removed[:, 1]] = np.reshape(u, (m, ch))

    if noise_std > 0:
        out[mask] += noise_std * rng.standard_normal((m, ch))

    return out.reshape(x.shape)
