import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError, NumericalError
from freemcg.util import RandomStreams
from freemcg.diffusion import DdimParams, GaussianMixturePrior, ddim_step, guidance_scale, \
    unguided_reverse_diffusion, sdedit_reconstruction

class TestDdim(TestBase):
    def test_ddim_params(self):
        p = DdimParams()
        self.assertEqual(0.0, p.eta)
        with self.assertRaises(InvalidInputError):
            DdimParams(eta=1.5)

    def test_guidance_scale(self):
        self.assertEqual(1.0, guidance_scale(1.0, 1.0))
        s = self.schedule
        p = DdimParams()
        self.assertAlmostEqual(np.sqrt(s.alpha_bar_at(10) * s.alpha_bar_at(9)), p.gamma_at(s, 10))

    def test_ddim_step(self):
        s = self.schedule
        p = DdimParams()
        rng = self.get_rng()
        x_t, x0, eps = rng.standard_normal((3, 4))
        ab_prev = s.alpha_bar_at(9)
        x = ddim_step(x_t, x0, eps, 10, s, p)
        np.testing.assert_allclose(np.sqrt(ab_prev) * x0 + np.sqrt(1 - ab_prev) * eps, x, atol=1e-14)

        g = rng.standard_normal(4)
        xg = ddim_step(x_t, x0, eps, 10, s, p, g=g)
        np.testing.assert_allclose(p.gamma_at(s, 10) * g, xg - x, atol=1e-14)

    def test_ddim_step_clean(self):
        s = self.schedule
        x_t, x0, eps = self.get_rng().standard_normal((3, 4))
        np.testing.assert_array_equal(x0, ddim_step(x_t, x0, eps, 0, s, DdimParams(), t_prev=-1))

    def test_ddim_step_invalid(self):
        s = self.schedule
        x_t, x0, eps = self.get_rng().standard_normal((3, 4))
        with self.assertRaises(InvalidInputError):
            ddim_step(x_t, x0, eps, 0, s, DdimParams())
        with self.assertRaises(InvalidInputError):
            ddim_step(x_t, x0, eps, 10, s, DdimParams(), t_prev=20)
        with self.assertRaises(InvalidInputError):
            ddim_step(x_t, x0, eps, 10, s, DdimParams(eta=0.5))

        p = DdimParams()
        p.eta = 2.0
        with self.assertRaises(NumericalError):
            ddim_step(x_t, x0, eps, 999, s, p, t_prev=0, noise=eps)

    def test_ddim_step_deterministic(self):
        s = self.schedule
        p = DdimParams(eta=0.7)
        x_t, x0, eps = self.get_rng().standard_normal((3, 4))
        a = ddim_step(x_t, x0, eps, 100, s, p, rng=self.get_rng(3))
        b = ddim_step(x_t, x0, eps, 100, s, p, rng=self.get_rng(3))
        np.testing.assert_array_equal(a, b)

    def test_unguided_reverse_diffusion_moments(self):
        s = self.schedule
        prior = GaussianMixturePrior(weights=[0.5, 0.5], means=[[-2.0, 0.0], [2.0, 0.0]], covs=np.eye(2))
        x_start = self.get_rng().standard_normal((8000, 2))
        x = unguided_reverse_diffusion(prior, s, x_start, s.T - 1, 100)

        np.testing.assert_allclose([0.0, 0.0], x.mean(axis=0), atol=0.1)
        m2 = np.mean(x ** 2, axis=0)
        np.testing.assert_allclose([5.0, 1.0], m2, rtol=0.05)

    def test_sdedit_reconstruction(self):
        s = self.schedule
        prior = self.create_subspace(latent_var=None)
        x = self.get_rng().standard_normal(10)
        streams = RandomStreams(seed=1)
        xr = sdedit_reconstruction(prior, s, x, 300, 20, 4, streams)
        self.assertEqual((4, 10), xr.shape)
        self.assertLessEqual(np.max(prior.off_span_residual(xr)), 1e-8)

        xs = sdedit_reconstruction(prior, s, x, 300, 20, 4, RandomStreams(seed=1), p=DdimParams(eta=1.0))
        self.assertLessEqual(np.max(prior.off_span_residual(xs)), 1e-8)
