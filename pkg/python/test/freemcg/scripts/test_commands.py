import os
import json
import numpy as np
import pandas as pd

from test.freemcg import TestBase
from freemcg.models import LinearSoftmax
from freemcg.io import read_array, write_array
from freemcg.evaluation import two_class_gmm_task
from freemcg.scripts.freemcg import main

class TestCommands(TestBase):
    def create_inputs(self, m, prior, x):
        d = self.get_test_dir()
        model = os.path.join(d, 'model.json')
        m.save(model)
        prior_fn = os.path.join(d, 'prior.json')
        prior.save(prior_fn)
        input_fn = os.path.join(d, 'x')
        write_array(input_fn, x)
        return d, ['--input', input_fn + '.f32', '--model', model, '--prior', prior_fn]

    def load_json(self, *parts):
        with open(os.path.join(*parts)) as f:
            return json.load(f)

    def test_verify(self):
        d = self.get_test_dir()
        out1, out2 = os.path.join(d, 'out1'), os.path.join(d, 'out2')
        self.assertEqual(0, main(['verify', '--out', out1, '--seed', '0']))
        self.assertEqual(0, main(['verify', '--out', out2, '--seed', '0']))

        for fn in ['verify.json', 'order_scan.csv', 'tangent_toy.csv', 'manifest.json', 'args.json', 'logs/verify.log']:
            self.assertTrue(os.path.isfile(os.path.join(out1, fn)), fn)

        report = self.load_json(out1, 'verify.json')
        self.assertLessEqual(report['span_check'], 1e-10)
        self.assertGreaterEqual(report['order_scan']['slope'], 2.5)

        manifest = self.load_json(out1, 'manifest.json')
        self.assertEqual('verify', manifest['command'])
        self.assertEqual(0, manifest['seed'])
        self.assertIn('verify.json', manifest['outputs'])
        self.assertNotIn('out', manifest['config'])

        with open(os.path.join(out1, 'manifest.json'), 'rb') as f1, open(os.path.join(out2, 'manifest.json'), 'rb') as f2:
            self.assertEqual(f1.read(), f2.read())

    def test_output_not_empty(self):
        d = self.get_test_dir()
        with open(os.path.join(d, 'junk'), 'w') as f:
            f.write('x')
        self.assertEqual(2, main(['verify', '--out', d]))

    def test_attribute_constant(self):
        m = LinearSoftmax(W=np.zeros((2, 4)))
        d, args = self.create_inputs(m, self.create_gmm(d=4), np.ones(4))
        out = os.path.join(d, 'out')
        self.assertEqual(0, main(['attribute'] + args + ['--particles', '10', '--ppm', 'map.pgm', '--out', out]))
        np.testing.assert_array_equal(np.zeros(4), read_array(os.path.join(out, 'attribution')))
        self.assertTrue(os.path.isfile(os.path.join(out, 'map.pgm')))
        self.assertIn('map.pgm', self.load_json(out, 'manifest.json')['outputs'])
        report = self.load_json(out, 'report.json')
        self.assertEqual(0, report['predicted_class'])

    def test_attribute_missing_input(self):
        m = LinearSoftmax(W=np.zeros((2, 4)))
        d, args = self.create_inputs(m, self.create_gmm(d=4), np.ones(4))
        input_fn = args[1]
        args[1] = os.path.join(d, 'missing.f32')
        out = os.path.join(d, 'out')
        self.assertEqual(2, main(['attribute'] + args + ['--particles', '10', '--out', out]))
        self.assertFalse(os.path.exists(out))

        args[1] = input_fn
        self.assertEqual(0, main(['attribute'] + args + ['--particles', '10', '--out', out]))

    def test_counterfactual(self):
        task = two_class_gmm_task()
        d, args = self.create_inputs(task.classifier, task.prior, task.x)
        out = os.path.join(d, 'out')
        self.assertEqual(0, main(['counterfactual'] + args + ['--mode', 'ascent', '--target-class', '1',
                                                              '--iters', '5', '--particles', '10', '--out', out]))
        self.assertTrue(os.path.isfile(os.path.join(out, 'trajectory', 'step_0005.f32')))
        np.testing.assert_array_equal((2,), read_array(os.path.join(out, 'counterfactual')).shape)
        report = self.load_json(out, 'report.json')
        self.assertEqual('ascent', report['mode'])
        self.assertEqual(6, report['steps'])
        self.assertLess(report['log_density'], 0)

    def test_counterfactual_missing_target(self):
        task = two_class_gmm_task()
        d, args = self.create_inputs(task.classifier, task.prior, task.x)
        self.assertEqual(1, main(['counterfactual'] + args + ['--out', os.path.join(d, 'out')]))
        self.assertFalse(os.path.exists(os.path.join(d, 'out')))

    def test_road(self):
        m = self.create_linear(n=3, d=16)
        x = self.get_rng().standard_normal((4, 4))
        d, args = self.create_inputs(m, self.create_gmm(d=16), x)
        for method in ['random', 'vanilla', 'integrated_gradients']:
            out = os.path.join(d, 'out_' + method)
            self.assertEqual(0, main(['road'] + args + ['--method', method, '--ig-steps', '8', '--out', out]))
            df = pd.read_csv(os.path.join(out, 'road.csv'))
            self.assertEqual(10, len(df))
            report = self.load_json(out, 'report.json')
            self.assertEqual(method, report['method'])

        out = os.path.join(d, 'out_file')
        self.assertEqual(0, main(['road'] + args + ['--map', os.path.join(d, 'out_random', 'map.f32'),
                                                    '--fractions', '0.0', '0.5', '--out', out]))
        self.assertEqual('file', self.load_json(out, 'report.json')['method'])

    def test_sweep(self):
        task = two_class_gmm_task()
        d, args = self.create_inputs(task.classifier, task.prior, task.x)
        out = os.path.join(d, 'out')
        self.assertEqual(0, main(['sweep'] + args + ['--mode', 'ascent', '--target-class', '1', '--iters', '10',
                                                     '--particles', '20', '--alpha', '0.0', '0.2',
                                                     '--beta', '0.01', '0.05', '--out', out]))
        df = pd.read_csv(os.path.join(out, 'sweep.csv'))
        self.assertEqual(4, len(df))
        self.assertEqual(['alpha', 'beta', 't_start', 'particles', 'eta', 'flip_rate', 'mean_l2', 'mean_log_density', 'auc'], list(df.columns))
        zero = df[df['alpha'] == 0.0]['flip_rate'].max()
        step = df[df['alpha'] == 0.2]['flip_rate'].min()
        self.assertLessEqual(zero, step)

    def test_sweep_too_large(self):
        task = two_class_gmm_task()
        d, args = self.create_inputs(task.classifier, task.prior, task.x)
        out = os.path.join(d, 'out')
        self.assertEqual(1, main(['sweep'] + args + ['--target-class', '1', '--alpha', '0.0', '0.1', '0.2',
                                                     '--max-points', '2', '--out', out]))
        self.assertFalse(os.path.exists(out))

    def test_sweep_gradient(self):
        task = two_class_gmm_task()
        d, args = self.create_inputs(task.classifier, task.prior, task.x)
        out = os.path.join(d, 'out')
        self.assertEqual(0, main(['sweep'] + args + ['--mode', 'gradient', '--target-class', '1', '--iters', '10',
                                                     '--alpha', '0.0', '0.2', '--out', out]))
        df = pd.read_csv(os.path.join(out, 'sweep.csv'))
        self.assertEqual(2, len(df))
        self.assertTrue(np.all(np.isfinite(df['mean_log_density'])))

    def test_road_missing_map(self):
        m = self.create_linear(n=3, d=16)
        d, args = self.create_inputs(m, self.create_gmm(d=16), np.ones(16))
        out = os.path.join(d, 'out')
        self.assertEqual(2, main(['road'] + args + ['--map', os.path.join(d, 'missing.f32'), '--out', out]))
        self.assertFalse(os.path.exists(out))
