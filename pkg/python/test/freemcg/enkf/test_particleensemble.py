import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError
from freemcg.enkf import ParticleEnsemble

class TestParticleEnsemble(TestBase):
    def test_init(self):
        e = self.create_ensemble(K=10, d=4, n=3)
        self.assertEqual(10, e.K)
        self.assertEqual(4, e.dim)
        self.assertEqual(3, e.classes)
        np.testing.assert_allclose(0.0, e.deviations_x().sum(axis=0), atol=1e-12)

    def test_init_invalid(self):
        with self.assertRaises(InvalidInputError):
            ParticleEnsemble(np.zeros((3, 2)), np.zeros((2, 2)))
        with self.assertRaises(InvalidInputError):
            ParticleEnsemble([[0.0, np.nan]], [[0.0, 0.0]])

    def test_from_classifier(self):
        m = self.create_linear(n=3, d=4)
        x = self.get_rng().standard_normal((6, 4))
        e = ParticleEnsemble.from_classifier(m, x)
        np.testing.assert_array_equal(m.eval(x), e.logits)

    def test_is_degenerate(self):
        e = ParticleEnsemble(np.ones((5, 2)), np.zeros((5, 3)))
        self.assertTrue(e.is_degenerate())
        self.assertFalse(self.create_ensemble().is_degenerate())
