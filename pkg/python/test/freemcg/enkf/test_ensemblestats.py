import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError
from freemcg.enkf import ParticleEnsemble, ensemble_stats
from freemcg.enkf.ensemblestats import check_materialize

class TestEnsembleStats(TestBase):
    def test_single_particle(self):
        st = ensemble_stats(ParticleEnsemble([[1.0, 2.0]], [[0.5, 0.5]]))
        np.testing.assert_array_equal(np.zeros((2, 2)), st.cov_xx)
        np.testing.assert_array_equal(np.zeros((2, 2)), st.cov_xf)

    def test_two_particles(self):
        st = ensemble_stats(ParticleEnsemble([[1.0, 0.0], [-1.0, 0.0]], [[1.0], [-1.0]]))
        np.testing.assert_allclose([[1.0, 0.0], [0.0, 0.0]], st.cov_xx)
        np.testing.assert_allclose([[1.0], [0.0]], st.cov_xf)

    def test_two_pass(self):
        e = self.create_ensemble(K=100, d=5, n=3)
        st = ensemble_stats(e)
        x, f = e.particles, e.logits
        cov_xx = np.zeros((5, 5))
        cov_xf = np.zeros((5, 3))
        for k in range(e.K):
            cov_xx += np.outer(x[k] - x.mean(axis=0), x[k] - x.mean(axis=0))
            cov_xf += np.outer(x[k] - x.mean(axis=0), f[k] - f.mean(axis=0))
        np.testing.assert_allclose(cov_xx / e.K, st.cov_xx, atol=1e-12)
        np.testing.assert_allclose(cov_xf / e.K, st.cov_xf, atol=1e-12)
        np.testing.assert_allclose(np.cov(x.T, bias=True), st.cov_xx, atol=1e-12)

    def test_eigen_check(self):
        e = self.create_ensemble(K=5, d=8)
        res, tail = ensemble_stats(e).eigen_check(e.K)
        self.assertLessEqual(res, 1e-8)
        self.assertLessEqual(tail, 1e-10)

    def test_check_materialize(self):
        check_materialize(64)
        with self.assertRaises(InvalidInputError):
            check_materialize(65)
