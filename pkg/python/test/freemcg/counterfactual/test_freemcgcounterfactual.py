import numpy as np

from test.freemcg import TestBase
from freemcg.errors import DivergenceError, InvalidInputError
from freemcg.models import Classifier, LinearSoftmax
from freemcg.diffusion import DdimParams, GaussianMixturePrior
from freemcg.evaluation import two_class_gmm_task, flip_rate, mean_l2, mean_log_density
from freemcg.counterfactual import CfConfig, normalize_gradient, ascent_cf, reverse_diffusion_cf, \
    generate_counterfactual, regeneration_baseline, gradient_ascent_cf

class BlackBoxLinear(Classifier):
    def __init__(self, W):
        super().__init__(dim_in=W.shape[1], dim_out=W.shape[0])
        self.W = W

    def eval_impl(self, x):
        return x @ self.W.T

class TestFreeMcgCounterfactual(TestBase):
    def create_config(self, **kwargs):
        args = dict(target_class=1, alpha=0.2, beta=0.01, K=100, n_ddim_steps=100, t_start=400,
                    iters=30, grad_norm=False)
        args.update(kwargs)
        return CfConfig(**args)

    def test_normalize_gradient(self):
        np.testing.assert_array_equal(np.zeros(3), normalize_gradient(np.zeros(3)))
        np.testing.assert_array_equal(np.zeros(2), normalize_gradient([1e-14, 0.0]))
        g = normalize_gradient([3.0, 4.0])
        np.testing.assert_allclose([0.6, 0.8], g)

    def test_ascent_identity(self):
        task = two_class_gmm_task()
        cfg = self.create_config(mode='ascent', alpha=0.0, beta=0.0, iters=5)
        r = ascent_cf(task.classifier, task.prior, self.schedule, task.x, cfg)
        np.testing.assert_array_equal(task.x, r.x_cf)
        self.assertEqual(6, len(r.trajectory))

    def test_ascent_proximal(self):
        task = two_class_gmm_task()
        cfg = self.create_config(mode='ascent', alpha=0.0, beta=0.5, iters=5)
        r = ascent_cf(task.classifier, task.prior, self.schedule, task.x, cfg, x_init=task.x + 1.0)
        d = [np.linalg.norm(y - task.x) for y in r.trajectory]
        np.testing.assert_allclose(0.5, np.array(d[1:]) / np.array(d[:-1]), atol=1e-12)

    def test_ascent_flip(self):
        task = two_class_gmm_task()
        m, prior = task.classifier, task.prior
        reference = prior.component_sample(1, 2000, self.get_rng())
        median = np.median(prior.log_pdf(reference))
        for seed in range(5):
            r = ascent_cf(m, prior, self.schedule, task.x, self.create_config(mode='ascent', seed=seed))
            self.assertTrue(r.flipped)
            self.assertGreaterEqual(prior.log_pdf(r.x_cf), median - 2.0)

            w = r.direction_weights[0]
            self.assertLess(w[0], 0)
            self.assertGreater(w[1], 0)

    def test_ascent_beta_monotone(self):
        task = two_class_gmm_task()
        l2 = []
        for beta in [0.0, 0.01, 0.05]:
            results = [ascent_cf(task.classifier, task.prior, self.schedule, task.x,
                                 self.create_config(mode='ascent', beta=beta, seed=seed))
                       for seed in range(5)]
            l2.append(mean_l2(results))
        self.assertGreater(l2[0], l2[1])
        self.assertGreater(l2[1], l2[2])

    def test_ascent_divergence(self):
        task = two_class_gmm_task()
        cfg = self.create_config(mode='ascent', alpha=1e6, K=10, iters=3)
        with self.assertRaises(DivergenceError):
            ascent_cf(task.classifier, task.prior, self.schedule, task.x, cfg)

    def test_reverse_flip(self):
        task = two_class_gmm_task()
        m, prior, s = task.classifier, task.prior, self.schedule
        reference = prior.component_sample(1, 2000, self.get_rng())
        median = np.median(prior.log_pdf(reference))

        results, regenerated = [], []
        for seed in range(50):
            cfg = self.create_config(seed=seed)
            results.append(reverse_diffusion_cf(m, prior, s, task.x, cfg))

            x1 = task.sample(self.get_rng(1000 + seed), label=1)
            b = regeneration_baseline(m, prior, s, x1, cfg)
            regenerated.append(np.linalg.norm(b.x_cf - task.x))

        self.assertGreaterEqual(flip_rate(results), 0.9)
        self.assertLess(mean_l2(results), np.mean(regenerated))
        log_pdf = np.mean([prior.log_pdf(r.x_cf) for r in results])
        self.assertGreaterEqual(log_pdf, median - 2.0)

    def test_reverse_particles(self):
        task = two_class_gmm_task()
        cfg = self.create_config(K=10, n_ddim_steps=20, ddim=DdimParams(eta=0.5), seed=3)
        r = reverse_diffusion_cf(task.classifier, task.prior, self.schedule, task.x, cfg)
        np.testing.assert_array_equal(np.mean(r.particles, axis=0), r.x_cf)
        self.assertEqual(21, len(r.trajectory))
        self.assertEqual(20, len(r.direction_weights))

        q = reverse_diffusion_cf(task.classifier, task.prior, self.schedule, task.x, CfConfig(orig=cfg))
        np.testing.assert_array_equal(r.x_cf, q.x_cf)

    def test_reverse_unguided_subspace(self):
        m = self.create_linear(n=3, d=10)
        prior = self.create_subspace(d=10, rank=2, latent_var=None)
        x = self.get_rng(1).standard_normal(10)
        cfg = self.create_config(target_class=0, alpha=0.0, beta=0.0, K=10, n_ddim_steps=20)
        r = reverse_diffusion_cf(m, prior, self.schedule, x, cfg)
        self.assertLessEqual(prior.off_span_residual(r.x_cf), 1e-6)

        b = regeneration_baseline(m, prior, self.schedule, x, self.create_config(target_class=0, K=10, n_ddim_steps=20))
        np.testing.assert_allclose(r.x_cf, b.x_cf, atol=1e-12)

    def test_generate_counterfactual(self):
        task = two_class_gmm_task()
        cfg = self.create_config(mode='ascent', K=10, iters=3)
        r = generate_counterfactual(task.classifier, task.prior, self.schedule, task.x, cfg)
        self.assertEqual(4, len(r.trajectory))
        d = r.to_dict()
        self.assertEqual(1, d['target_class'])
        self.assertEqual(4, d['steps'])

        with self.assertRaises(InvalidInputError):
            generate_counterfactual(task.classifier, task.prior, self.schedule, np.zeros(3), cfg)

    def create_thin_task(self):
        # Data spread along the first axis, classifier mostly sensitive to the second
        prior = GaussianMixturePrior(weights=[0.5, 0.5], means=[[-4.0, 0.0], [4.0, 0.0]],
                                     covs=np.diag([4.0, 0.01]))
        m = LinearSoftmax(W=[[0.0, 0.0], [0.5, 3.0]])
        return m, prior, np.array([-4.0, 0.0])

    def test_gradient_ascent_identity(self):
        m, prior, x = self.create_thin_task()
        r = gradient_ascent_cf(m, x, self.create_config(mode='gradient', alpha=0.0, beta=0.0, iters=4))
        np.testing.assert_array_equal(x, r.x_cf)
        self.assertEqual(5, len(r.trajectory))

    def test_gradient_ascent_step(self):
        m, prior, x = self.create_thin_task()
        r = gradient_ascent_cf(m, x, self.create_config(mode='gradient', iters=1))
        np.testing.assert_allclose(x + 0.2 * m.log_prob_gradient(x, 1), r.x_cf, atol=1e-12)

    def test_gradient_ascent_black_box(self):
        m = BlackBoxLinear(np.eye(2))
        with self.assertRaises(InvalidInputError):
            gradient_ascent_cf(m, np.zeros(2), self.create_config(mode='gradient'))

    def test_gradient_ascent_leaves_data(self):
        m, prior, x = self.create_thin_task()
        s = self.schedule

        g = gradient_ascent_cf(m, x, self.create_config(mode='gradient'))
        self.assertTrue(g.flipped)
        self.assertGreater(abs(g.x_cf[1]), 0.5)

        results = []
        for seed in range(5):
            r = ascent_cf(m, prior, s, x, self.create_config(mode='ascent', seed=seed))
            self.assertLess(abs(r.x_cf[1]), 0.1)
            self.assertLess(prior.log_pdf(g.x_cf), prior.log_pdf(r.x_cf) - 20.0)
            results.append(r)

        self.assertLess(mean_log_density([g], prior), mean_log_density(results, prior))

    def test_generate_gradient(self):
        m, prior, x = self.create_thin_task()
        cfg = self.create_config(mode='gradient', iters=3)
        r = generate_counterfactual(m, prior, self.schedule, x, cfg)
        q = gradient_ascent_cf(m, x, cfg)
        np.testing.assert_array_equal(q.x_cf, r.x_cf)
