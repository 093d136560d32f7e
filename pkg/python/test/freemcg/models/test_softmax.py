import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError
from freemcg.models import softmax, log_softmax, one_hot, oracle_log_prob_gradient
from freemcg.models.softmax import check_class_index

class TestSoftmax(TestBase):
    def test_softmax(self):
        p = softmax([np.log(7), 0, 0, 0])
        np.testing.assert_allclose(p, [0.7, 0.1, 0.1, 0.1], atol=1e-12)

        p = softmax([1000.0, 0.0])
        np.testing.assert_allclose(p, [1.0, 0.0], atol=1e-12)
        self.assertTrue(np.all(np.isfinite(p)))

    def test_softmax_shift(self):
        l = np.array([0.3, -1.2, 2.5])
        np.testing.assert_allclose(softmax(l), softmax(l + 100.0), atol=1e-14)

    def test_softmax_batch(self):
        l = self.get_rng().standard_normal((5, 3))
        p = softmax(l)
        self.assertEqual((5, 3), p.shape)
        np.testing.assert_allclose(p.sum(axis=-1), 1.0, atol=1e-14)

    def test_softmax_invalid(self):
        with self.assertRaises(InvalidInputError):
            softmax([np.nan, 0.0])
        with self.assertRaises(InvalidInputError):
            softmax(np.zeros((3, 0)))

    def test_log_softmax(self):
        l = np.array([0.3, -1.2, 2.5])
        np.testing.assert_allclose(np.exp(log_softmax(l)), softmax(l), atol=1e-14)

    def test_one_hot(self):
        np.testing.assert_array_equal([0, 0, 1], one_hot(2, 3))
        with self.assertRaises(InvalidInputError):
            one_hot(3, 3)

    def test_check_class_index(self):
        self.assertEqual(1, check_class_index(1, 2))
        self.assertEqual(1, check_class_index(np.int64(1), 2))
        with self.assertRaises(InvalidInputError):
            check_class_index(-1, 2)
        with self.assertRaises(InvalidInputError):
            check_class_index(0.5, 2)
        with self.assertRaises(InvalidInputError):
            check_class_index(True, 2)

    def test_oracle_log_prob_gradient(self):
        j = np.array([[1.0, 2.0], [0.0, -1.0]])
        p = np.array([0.25, 0.75])
        np.testing.assert_allclose([0.75, 2.25], oracle_log_prob_gradient(j, p, 0))

        with self.assertRaises(InvalidInputError):
            oracle_log_prob_gradient(j, [0.2, 0.2, 0.6], 0)
