import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError
from freemcg.models import Classifier, RbfSoftmax

class TestRbfSoftmax(TestBase):
    def test_eval(self):
        m = RbfSoftmax(centers=[[0.0, 0.0], [1.0, 0.0]], bandwidth=2.0)
        np.testing.assert_allclose([-0.25, 0.0], m.eval([1.0, 0.0]))

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            RbfSoftmax(centers=[[0.0, 0.0]], bandwidth=0.0)

    def test_jacobian(self):
        m = self.create_rbf(n=3, d=3)
        points = self.get_rng(1).standard_normal((100, 3))
        self.assertLessEqual(m.check_jacobian(points), 1e-5)

    def test_from_dict(self):
        m = self.create_rbf()
        mm = Classifier.from_dict(m.to_dict())
        self.assertIsInstance(mm, RbfSoftmax)
        self.assertEqual(m.bandwidth, mm.bandwidth)

    def test_default_bandwidth(self):
        m = RbfSoftmax(centers=[[0.0, 0.0], [1.0, 0.0]])
        self.assertEqual(1.0, m.bandwidth)
        np.testing.assert_allclose([-1.0, 0.0], m.eval([1.0, 0.0]))

        mm = Classifier.from_dict({'kind': 'rbf', 'centers': [[0.0], [1.0]], 'bandwidth': None})
        self.assertEqual(1.0, mm.bandwidth)

        with self.assertRaises(InvalidInputError):
            RbfSoftmax(centers=[[0.0, 0.0]], bandwidth='wide')
