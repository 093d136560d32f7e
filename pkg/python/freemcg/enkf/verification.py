import numpy as np

from ..errors import InvalidInputError
from ..util.linalg import gram_schmidt, span_residual
from .ensemblestats import ensemble_stats, check_materialize

def thm2_residual(m, e):
    """
    Frobenius norm of C_xf - C_xx J(x_bar)^T, the error of the first-order
    ensemble approximation of the preconditioned Jacobian.

    :param m: Classifier with an analytic Jacobian.
    :param e: ParticleEnsemble whose logits were computed with m.
    """
    check_materialize(e.dim)
    st = ensemble_stats(e)
    j = m.jacobian(st.mean_x)
    return float(np.linalg.norm(st.cov_xf - st.cov_xx @ j.T))

def cov_action_span_check(e, b):
    """
    Relative norm of the component of C_xx b orthogonal to the span of the
    particle deviations. Zero when the deviations vanish.
    """
    if e.K < 2:
        raise InvalidInputError('Span check needs at least two particles.')
    b = np.asarray(b, dtype=float)
    if b.shape != (e.dim,):
        raise InvalidInputError('Vector b must have the particle dimension.')
    dx = e.deviations_x()
    q = gram_schmidt(dx)
    if q.shape[0] == 0:
        return 0.0
    v = dx.T @ (dx @ b) / e.K
    return span_residual(q, v)

def eigen_action_check(e):
    """
    Returns (eigen-equation residual, largest trailing eigenvalue) of C_xx.
    """
    check_materialize(e.dim)
    return ensemble_stats(e).eigen_check(e.K)
