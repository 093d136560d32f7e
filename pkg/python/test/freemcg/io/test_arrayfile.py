import os
import json
import numpy as np

from test.freemcg import TestBase
from freemcg.errors import DataFileError
from freemcg.io import ArrayFile, read_array, write_array

class TestArrayFile(TestBase):
    def test_write_read(self):
        a = np.arange(24, dtype=float).reshape(2, 3, 4) / 4
        fn = self.get_test_filename(ext='.f32')
        paths = write_array(fn, a)
        self.assertEqual([fn, fn[:-4] + '.json'], paths)
        np.testing.assert_array_equal(a, read_array(fn))
        np.testing.assert_array_equal(a, read_array(fn[:-4]))

    def test_header(self):
        fn = os.path.join(self.get_test_dir(), 'x')
        write_array(fn, np.zeros((3, 2)))
        with open(fn + '.json') as f:
            header = json.load(f)
        self.assertEqual({'dtype': 'f32', 'order': 'row-major', 'shape': [3, 2]}, header)
        self.assertEqual(24, os.path.getsize(fn + '.f32'))

        with open(fn + '.f32', 'rb') as f:
            self.assertEqual(bytes(24), f.read())

    def test_size_mismatch(self):
        fn = os.path.join(self.get_test_dir(), 'x')
        write_array(fn, np.zeros((3, 2)))
        self.write_json(fn + '.json', {'dtype': 'f32', 'order': 'row-major', 'shape': [4, 2]})
        with self.assertRaises(DataFileError):
            read_array(fn)

    def test_invalid_header(self):
        fn = os.path.join(self.get_test_dir(), 'x')
        write_array(fn, np.zeros(3))
        self.write_json(fn + '.json', {'dtype': 'f64', 'shape': [3]})
        with self.assertRaises(DataFileError):
            read_array(fn)
        self.write_json(fn + '.json', {'shape': [-3]})
        with self.assertRaises(DataFileError):
            read_array(fn)

    def test_missing(self):
        with self.assertRaises(DataFileError):
            read_array(os.path.join(self.get_test_dir(), 'missing'))

    def test_paths(self):
        f = ArrayFile('dir/attribution.json')
        self.assertEqual('dir/attribution.f32', f.payload_path)
        self.assertEqual('dir/attribution.json', f.header_path)
