import numpy as np

from ..constants import Constants
from ..errors import InvalidInputError
from ..models.oracleclassifier import OracleClassifier
from ..models.softmax import log_softmax, check_class_index
from ..util.randomstreams import RandomStreams
from .attributionmap import AttributionMap
from .postprocess import postprocess, spatial_shape

def _prepare(m, x, c, layout):
    x = np.asarray(x, dtype=float)
    layout = tuple(layout) if layout is not None else x.shape
    x = m.check_input(x.reshape(-1))
    if c is None:
        c = m.predict(x)
    c = check_class_index(c, m.dim_out)
    return x, c, layout

def _require_oracle(m):
    if not isinstance(m, OracleClassifier):
        raise InvalidInputError('Classifier `{}` has no analytic Jacobian.'.format(type(m).__name__))

def baseline_vanilla_gradient(m, x, c=None, layout=None):
    """
    Absolute value of the analytic gradient of log p(c|x).
    """
    _require_oracle(m)
    x, c, layout = _prepare(m, x, c, layout)
    return postprocess(m.log_prob_gradient(x, c), layout, target_class=c)

def baseline_input_x_gradient(m, x, c=None, layout=None):
    _require_oracle(m)
    x, c, layout = _prepare(m, x, c, layout)
    return postprocess(x * m.log_prob_gradient(x, c), layout, target_class=c)

def target_function(m, c, target):
    if target == 'log_prob':
        return lambda x: log_softmax(m.eval(x))[..., c]
    elif target == 'logit':
        return lambda x: m.eval(x)[..., c]
    else:
        raise InvalidInputError('Unknown integrated gradients target `{}`.'.format(target))

def target_gradient(m, c, target, x, step=Constants.FD_STEP):
    """
    Gradient of the target function at a single point, analytic when the
    classifier is an oracle, central finite differences otherwise.
    """
    if isinstance(m, OracleClassifier):
        if target == 'logit':
            return m.jacobian(x)[c]
        return m.log_prob_gradient(x, c)

    fn = target_function(m, c, target)
    h = step * np.eye(x.shape[0])
    fp = fn(x[None, :] + h)
    fm = fn(x[None, :] - h)
    return (fp - fm) / (2 * step)

def integrated_gradients(m, x, c, steps=64, baseline=None, target='log_prob'):
    """
    Signed integrated gradients along the straight path from the baseline to
    x, with the midpoint rule on `steps` intervals.
    """
    if steps < 8:
        raise InvalidInputError('Integrated gradients needs at least 8 steps, got {}.'.format(steps))
    target_function(m, c, target)
    b = np.zeros_like(x) if baseline is None else np.asarray(baseline, dtype=float).reshape(-1)
    if b.shape != x.shape:
        raise InvalidInputError('Baseline shape {} does not match input shape {}.'.format(b.shape, x.shape))

    alphas = (np.arange(steps) + 0.5) / steps
    grad = np.zeros_like(x)
    for a in alphas:
        grad += target_gradient(m, c, target, b + a * (x - b))
    return (x - b) * grad / steps

def baseline_integrated_gradients(m, x, c=None, steps=64, baseline=None, target='log_prob', layout=None):
    x, c, layout = _prepare(m, x, c, layout)
    ig = integrated_gradients(m, x, c, steps=steps, baseline=baseline, target=target)
    return postprocess(ig, layout, target_class=c)

def random_map(layout, seed=None, streams=None, index=0):
    """
    Uniform random attribution map, the reference an informative map has to
    beat under removal metrics.
    """
    streams = streams if streams is not None else RandomStreams(seed)
    shape = spatial_shape(layout)
    v = streams.rng('random_map', index).uniform(size=shape)
    return AttributionMap(values=v, layout=layout)
