import numpy as np

from ..setup_logger import logger
from ..errors import InvalidInputError
from ..models.softmax import one_hot, check_prob_vector

def direction_weight(c, p):
    """
    Logit-space weight e_c - p of the log-probability gradient.
    """
    p = check_prob_vector(p)
    return one_hot(c, p.shape[0]) - p

def freemcg_covariance_gradient(e, w):
    """
    Returns C_xf w = 1/K sum_k (x_k - x_bar)(f_k - f_bar)^T w without
    forming any d x d matrix.
    """
    w = np.asarray(w, dtype=float)
    if w.shape != (e.classes,):
        raise InvalidInputError('Direction weight has length {}, expected {}.'.format(w.shape, e.classes))
    dx = e.deviations_x()
    df = e.deviations_f()
    # Per-particle scalar weights, summed in particle order
    a = df @ w
    return dx.T @ a / e.K

def freemcg_gradient(e, c, p):
    """
    Derivative-free, covariance-preconditioned estimate of the gradient of
    log p(y=c|x) from a particle ensemble:

        g = 1/K sum_k (x_k - x_bar)(f(x_k) - f_bar)^T (e_c - p)

    The result lies in the span of the particle deviations.
    """
    if e is None or e.K < 1:
        raise InvalidInputError('Ensemble is empty.')
    w = direction_weight(c, p)
    g = freemcg_covariance_gradient(e, w)
    logger.trace('FreeMCG gradient from {} particles, |w|={:.3e}, |g|={:.3e}'.format(e.K, np.linalg.norm(w), np.linalg.norm(g)))
    return g
