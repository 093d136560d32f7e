import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError
from freemcg.diffusion import NoiseSchedule

class TestNoiseSchedule(TestBase):
    def test_build(self):
        s = self.schedule
        self.assertEqual(1000, s.T)
        self.assertAlmostEqual(1e-4, s.beta[0])
        self.assertAlmostEqual(0.02, s.beta[-1])
        self.assertTrue(np.all(np.diff(s.alpha_bar) < 0))
        self.assertLess(s.alpha_bar[-1], 1e-4)

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            NoiseSchedule(T=1)
        with self.assertRaises(InvalidInputError):
            NoiseSchedule(beta_min=0.1, beta_max=0.01)

    def test_alpha_bar_at(self):
        s = self.schedule
        self.assertEqual(1.0, s.alpha_bar_at(-1))
        self.assertEqual(0.0, s.sigma_at(-1))
        self.assertAlmostEqual(1 - 1e-4, s.alpha_bar_at(0))
        ab = s.alpha_bar_at(400)
        self.assertAlmostEqual(np.sqrt((1 - ab) / ab), s.sigma_at(400))

        with self.assertRaises(InvalidInputError):
            s.alpha_bar_at(1000)
        with self.assertRaises(InvalidInputError):
            s.alpha_bar_at(-2)
        with self.assertRaises(InvalidInputError):
            s.check_timestep(2.5)

    def test_tilde_beta_between(self):
        s = self.schedule
        self.assertAlmostEqual(s.tilde_beta[300], s.tilde_beta_between(300, 299))

        ab, ab_prev = s.alpha_bar_at(300), s.alpha_bar_at(200)
        tb = np.sqrt((1 - ab_prev) / (1 - ab)) * np.sqrt(1 - ab / ab_prev)
        self.assertAlmostEqual(tb, s.tilde_beta_between(300, 200))
        self.assertEqual(0.0, s.tilde_beta_between(300, -1))

        with self.assertRaises(InvalidInputError):
            s.tilde_beta_between(200, 300)

    def test_get_ddim_timesteps(self):
        ts = self.schedule.get_ddim_timesteps(400, 100)
        self.assertEqual(100, ts.shape[0])
        self.assertEqual(400, ts[0])
        self.assertEqual(0, ts[-1])
        self.assertTrue(np.all(np.diff(ts) < 0))

        ts = self.schedule.get_ddim_timesteps(3, 10)
        np.testing.assert_array_equal([3, 2, 1, 0], ts)

        with self.assertRaises(InvalidInputError):
            self.schedule.get_ddim_timesteps(400, 0)
