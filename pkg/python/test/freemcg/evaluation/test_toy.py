import numpy as np

from test.freemcg import TestBase
from freemcg.evaluation import tangent_toy

class TestToy(TestBase):
    def test_arc(self):
        r = tangent_toy()
        self.assertEqual(10, r.points.shape[0])
        self.assertTrue(np.all(r.free_angles < r.raw_angles))
        self.assertLessEqual(np.max(r.free_ratios), 0.05)
        np.testing.assert_allclose([-1.0, 2.0], r.raw_gradients[-1])
        self.assertTrue(r.to_dict()['free_below_raw'])

    def test_line(self):
        r = tangent_toy(kappa=0.0)
        np.testing.assert_array_equal(np.zeros(10), r.free_gradients[:, 1])
        self.assertLessEqual(np.max(r.free_ratios), 1e-10)
        self.assertEqual(11, len(r.to_dataframe().columns))
