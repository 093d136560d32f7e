import os
import json
import numpy as np

from ..setup_logger import logger
from ..errors import DataFileError

class ArrayFile():
    """
    Dense array stored as a little-endian float32 payload `<stem>.f32` with
    a JSON sidecar `<stem>.json` holding the shape in row-major order.
    """

    PAYLOAD_EXT = '.f32'
    HEADER_EXT = '.json'
    DTYPE = 'f32'
    ORDER = 'row-major'

    def __init__(self, filename=None):
        self.stem = ArrayFile.get_stem(filename) if filename is not None else None

    @staticmethod
    def get_stem(filename):
        stem, ext = os.path.splitext(filename)
        if ext in (ArrayFile.PAYLOAD_EXT, ArrayFile.HEADER_EXT):
            return stem
        return filename

    @property
    def payload_path(self):
        return self.stem + ArrayFile.PAYLOAD_EXT

    @property
    def header_path(self):
        return self.stem + ArrayFile.HEADER_EXT

    def read_header(self):
        try:
            with open(self.header_path, 'r') as f:
                header = json.load(f)
        except (OSError, json.JSONDecodeError) as ex:
            raise DataFileError('Cannot read array header `{}`: {}'.format(self.header_path, ex))

        if header.get('dtype', ArrayFile.DTYPE) != ArrayFile.DTYPE:
            raise DataFileError('Unsupported array dtype `{}` in `{}`.'.format(header.get('dtype'), self.header_path))
        if header.get('order', ArrayFile.ORDER) != ArrayFile.ORDER:
            raise DataFileError('Unsupported array order `{}` in `{}`.'.format(header.get('order'), self.header_path))
        shape = header.get('shape')
        if not isinstance(shape, list) or any(not isinstance(i, int) or i < 0 for i in shape):
            raise DataFileError('Invalid array shape in `{}`.'.format(self.header_path))
        return header

    def read(self):
        """
        Returns the array as float64.
        """
        header = self.read_header()
        shape = tuple(header['shape'])
        try:
            with open(self.payload_path, 'rb') as f:
                buf = f.read()
        except OSError as ex:
            raise DataFileError('Cannot read array payload `{}`: {}'.format(self.payload_path, ex))

        expected = 4 * int(np.prod(shape))
        if len(buf) != expected:
            raise DataFileError('Array payload `{}` has {} bytes, expected {}.'.format(self.payload_path, len(buf), expected))

        logger.debug('Read array of shape {} from {}'.format(shape, self.payload_path))
        return np.frombuffer(buf, dtype='<f4').reshape(shape).astype(float)

    def write(self, a):
        a = np.asarray(a, dtype=float)
        header = {
            'shape': [int(i) for i in a.shape],
            'dtype': ArrayFile.DTYPE,
            'order': ArrayFile.ORDER,
        }
        d = os.path.dirname(self.stem)
        if d != '':
            os.makedirs(d, exist_ok=True)
        with open(self.payload_path, 'wb') as f:
            f.write(np.ascontiguousarray(a, dtype='<f4').tobytes())
        with open(self.header_path, 'w') as f:
            json.dump(header, f, sort_keys=True)
        logger.debug('Wrote array of shape {} to {}'.format(a.shape, self.payload_path))
        return [self.payload_path, self.header_path]

def read_array(filename):
    return ArrayFile(filename).read()

def write_array(filename, a):
    """
    Writes the array and returns the paths of the payload and the header.
    """
    return ArrayFile(filename).write(a)
