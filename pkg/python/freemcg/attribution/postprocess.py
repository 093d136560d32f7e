import numpy as np

from ..errors import InvalidInputError
from .attributionmap import AttributionMap

def spatial_shape(layout):
    """
    Shape of the map belonging to an input of the given shape. Inputs of
    rank three are channels-last images, the channel axis is reduced.
    """
    layout = tuple(int(i) for i in layout)
    if len(layout) == 3:
        return layout[:2]
    return layout

def postprocess(raw, layout, **kwargs):
    """
    Turns a signed gradient into an attribution map by averaging over the
    color channels and taking the absolute value. Grayscale and vector inputs
    only get the absolute value.

    :param raw: Signed gradient, any shape with prod(layout) entries.
    :param layout: Input shape, (H, W, C) for multi-channel images.
    """

    raw = np.asarray(raw, dtype=float)
    layout = tuple(int(i) for i in layout)
    if raw.size != int(np.prod(layout)):
        raise InvalidInputError('Gradient of size {} does not match layout {}.'.format(raw.size, layout))

    r = raw.reshape(layout)
    if len(layout) == 3:
        v = np.abs(np.mean(r, axis=-1))
    else:
        v = np.abs(r)

    return AttributionMap(values=v, raw_gradient=raw.reshape(-1), layout=layout, **kwargs)
