import numpy as np

from test.freemcg import TestBase
from freemcg.errors import InvalidInputError
from freemcg.util import RandomStreams

class TestRandomStreams(TestBase):
    def test_rng(self):
        s = RandomStreams(seed=42)
        a = s.rng('forward', 3, 1).standard_normal(5)
        b = s.rng('forward', 3, 1).standard_normal(5)
        np.testing.assert_array_equal(a, b)

        c = s.rng('forward', 3, 2).standard_normal(5)
        d = s.rng('attribute', 3, 1).standard_normal(5)
        e = RandomStreams(seed=43).rng('forward', 3, 1).standard_normal(5)
        for x in [c, d, e]:
            self.assertFalse(np.array_equal(a, x))

    def test_particle_normal(self):
        s = RandomStreams(seed=1)
        a = s.particle_normal('ddim', 4, 3, 7)
        b = s.particle_normal('ddim', 6, 3, 7)
        self.assertEqual((4, 3), a.shape)
        np.testing.assert_array_equal(a, b[:4])
        np.testing.assert_array_equal(s.rng('ddim', 7, 2).standard_normal(3), a[2])

    def test_copy(self):
        s = RandomStreams(seed=9)
        self.assertEqual(9, s.copy().seed)

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            RandomStreams(seed=-1)
        with self.assertRaises(InvalidInputError):
            RandomStreams(seed=2 ** 64)
        with self.assertRaises(InvalidInputError):
            RandomStreams().rng('unknown')
