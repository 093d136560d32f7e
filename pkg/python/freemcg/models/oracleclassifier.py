import numpy as np

from ..constants import Constants
from ..errors import InvalidInputError
from .classifier import Classifier
from .softmax import softmax, oracle_log_prob_gradient

class OracleClassifier(Classifier):
    """
    Classifier that also exposes its analytic Jacobian. The Jacobian is only
    used by tests, baselines and theorem verification, never by FreeMCG.
    """

    def jacobian(self, x):
        """
        Returns df/dx of shape (n, d) at a single point x.
        """
        x = self.check_input(x)
        if x.ndim != 1:
            raise InvalidInputError('Jacobian is evaluated at a single point.')
        return self.jacobian_impl(x)

    def jacobian_impl(self, x):
        raise NotImplementedError()

    def log_prob_gradient(self, x, c):
        """
        Returns the gradient of log softmax(f(x))_c with respect to x.
        """
        x = self.check_input(x)
        return oracle_log_prob_gradient(self.jacobian(x), softmax(self.eval(x)), c)

    def finite_difference_jacobian(self, x, step=Constants.FD_STEP):
        x = self.check_input(x)
        j = np.empty((self.dim_out, self.dim_in))
        for i in range(self.dim_in):
            h = np.zeros(self.dim_in)
            h[i] = step
            j[:, i] = (self.eval(x + h) - self.eval(x - h)) / (2 * step)
        return j

    def check_jacobian(self, points, step=Constants.FD_STEP):
        """
        Compares the analytic Jacobian with central finite differences at
        each point and returns the largest relative Frobenius error.
        """
        err = 0.0
        for x in np.atleast_2d(points):
            j = self.jacobian(x)
            j_fd = self.finite_difference_jacobian(x, step=step)
            n = max(np.linalg.norm(j), 1e-12)
            err = max(err, np.linalg.norm(j - j_fd) / n)
        return err
