import json
import numpy as np

from test.freemcg import TestBase
from freemcg import FreeMcgObject
from freemcg.models import LinearSoftmax
from freemcg.diffusion import NoiseSchedule

class TestFreeMcgObject(TestBase):
    def test_copy(self):
        s = NoiseSchedule(T=500)
        s.init_from_args(None, {'T': 500})
        c = s.copy()
        self.assertEqual(500, c.T)
        self.assertIs(s.args, c.args)
        self.assertNotIn('jsonomit', c.__dict__)

    def test_get_arg(self):
        o = FreeMcgObject()
        self.assertEqual(3, o.get_arg('a', 3))
        o.init_from_args(None, {'a': 5, 'b': None})
        self.assertEqual(5, o.get_arg('a', 3))
        self.assertEqual(7, o.get_arg('b', 7))
        self.assertTrue(o.is_arg('a'))
        self.assertFalse(o.is_arg('b'))

    def test_save_json_default(self):
        d = {'a': np.arange(3), 'b': np.float32(0.5), 'c': (1, 2)}
        s = json.dumps(d, default=FreeMcgObject.save_json_default, sort_keys=True)
        self.assertEqual('{"a": [0, 1, 2], "b": 0.5, "c": [1, 2]}', s)
        with self.assertRaises(TypeError):
            json.dumps({'o': object()}, default=FreeMcgObject.save_json_default)

    def test_classifier_save(self):
        fn = self.get_test_filename(ext='.json')
        LinearSoftmax(W=np.eye(2)).save(fn)
        with open(fn) as f:
            d = json.load(f)
        self.assertEqual('linear', d['kind'])
        self.assertEqual([[1.0, 0.0], [0.0, 1.0]], d['W'])
