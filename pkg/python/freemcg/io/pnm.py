import numpy as np

from ..errors import InvalidInputError

def to_bytes(a, vmin=None, vmax=None):
    """
    Linearly maps [vmin, vmax] to 0..255. Constant images map to zero.
    """
    a = np.asarray(a, dtype=float)
    vmin = np.min(a) if vmin is None else vmin
    vmax = np.max(a) if vmax is None else vmax
    if vmax > vmin:
        a = (a - vmin) / (vmax - vmin)
    else:
        a = np.zeros_like(a)
    return np.round(255 * np.clip(a, 0, 1)).astype(np.uint8)

def write_pgm(filename, a, vmin=None, vmax=None):
    """
    Writes a 2D array as a binary grayscale PGM (P5) image.
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise InvalidInputError('PGM export needs a 2D array, got shape {}.'.format(a.shape))
    h, w = a.shape
    with open(filename, 'wb') as f:
        f.write('P5\n{} {}\n255\n'.format(w, h).encode('ascii'))
        f.write(to_bytes(a, vmin, vmax).tobytes())
    return filename

def write_ppm(filename, a, vmin=None, vmax=None):
    """
    Writes an (H, W, 3) array as a binary color PPM (P6) image.
    """
    a = np.asarray(a)
    if a.ndim != 3 or a.shape[-1] != 3:
        raise InvalidInputError('PPM export needs an (H, W, 3) array, got shape {}.'.format(a.shape))
    h, w, _ = a.shape
    with open(filename, 'wb') as f:
        f.write('P6\n{} {}\n255\n'.format(w, h).encode('ascii'))
        f.write(to_bytes(a, vmin, vmax).tobytes())
    return filename

def export_image(filename, a, vmin=None, vmax=None):
    a = np.asarray(a)
    if a.ndim == 1:
        a = a[None, :]
    if a.ndim == 3 and a.shape[-1] == 3:
        return write_ppm(filename, a, vmin, vmax)
    elif a.ndim == 3 and a.shape[-1] == 1:
        return write_pgm(filename, a[..., 0], vmin, vmax)
    return write_pgm(filename, a, vmin, vmax)
