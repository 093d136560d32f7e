import numpy as np
from scipy.special import softmax as scipy_softmax, log_softmax as scipy_log_softmax

from ..errors import InvalidInputError

def check_logits(l):
    l = np.asarray(l, dtype=float)
    if l.ndim == 0 or l.shape[-1] < 1:
        raise InvalidInputError('Logits must have at least one class.')
    if not np.all(np.isfinite(l)):
        raise InvalidInputError('Logits must be finite.')
    return l

def softmax(l):
    """
    Shift-stabilized softmax over the last axis.

    :param l: Logits, shape (..., n).
    :return: Probability vectors of the same shape.
    """
    l = check_logits(l)
    return scipy_softmax(l, axis=-1)

def log_softmax(l):
    l = check_logits(l)
    return scipy_log_softmax(l, axis=-1)

def one_hot(c, n):
    """
    Returns the one-hot vector e_c of length n.
    """
    c = check_class_index(c, n)
    e = np.zeros(n)
    e[c] = 1.0
    return e

def check_class_index(c, n):
    if isinstance(c, (bool, np.bool_)) or int(c) != c:
        raise InvalidInputError('Class index must be an integer, got {}.'.format(c))
    c = int(c)
    if c < 0 or c >= n:
        raise InvalidInputError('Class index {} is out of range [0, {}).'.format(c, n))
    return c

def check_prob_vector(p, tol=1e-9):
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.shape[0] < 1:
        raise InvalidInputError('Probability vector must be one dimensional.')
    if not np.all(np.isfinite(p)) or np.any(p < 0) or np.any(p > 1) or abs(p.sum() - 1.0) > tol:
        raise InvalidInputError('Invalid probability vector.')
    return p

def oracle_log_prob_gradient(j, p, c):
    """
    Gradient of log softmax(f(x))_c with respect to x given the Jacobian
    j = df/dx of shape (n, d): j^T (e_c - p).
    """
    j = np.atleast_2d(np.asarray(j, dtype=float))
    p = check_prob_vector(p)
    if j.shape[0] != p.shape[0]:
        raise InvalidInputError('Jacobian has {} rows but the probability vector has {} entries.'.format(j.shape[0], p.shape[0]))
    return j.T @ (one_hot(c, p.shape[0]) - p)
