import numpy as np

from test.freemcg import TestBase
from freemcg.evaluation import two_class_gmm_task, blob_task

class TestSynthetic(TestBase):
    def test_two_class_gmm_task(self):
        task = two_class_gmm_task()
        m = task.classifier
        self.assertEqual(0, m.predict(task.x))
        self.assertEqual(1, m.predict([0.1, 0.0]))
        self.assertEqual(0, m.predict([-0.1, 3.0]))
        l = m.eval([1.5, -2.0])
        self.assertAlmostEqual(3.0, l[1] - l[0])

    def test_blob_task(self):
        task = blob_task()
        self.assertEqual((2, 16, 16), task.templates.shape)
        self.assertEqual(256, task.classifier.dim_in)
        self.assertEqual(256, task.prior.dim)
        self.assertEqual(1.0, task.templates[0, 8, 4])
        np.testing.assert_allclose(1.5, np.linalg.norm(task.classifier.W, axis=1))

        x = task.sample(self.get_rng(), label=1)
        self.assertEqual(1, task.classifier.predict(x))
