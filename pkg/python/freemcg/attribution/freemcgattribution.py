import numpy as np

from ..setup_logger import logger
from ..errors import InvalidInputError, NumericalError
from ..util.randomstreams import RandomStreams
from ..util.timer import Timer
from ..models.softmax import softmax, check_class_index
from ..enkf import ParticleEnsemble, direction_weight, freemcg_gradient
from ..diffusion import forward_diffuse_particles
from .attributionconfig import AttributionConfig
from .postprocess import postprocess

def check_sign_structure(w, c):
    """
    With c the predicted class, e_c - p has a nonnegative entry at c and
    nonpositive entries elsewhere.
    """
    others = np.delete(w, c)
    if w[c] < 0 or np.any(others > 0):
        raise NumericalError('Direction weight {} violates the sign structure of class {}.'.format(w, c))

def attribute(m, den, s, x, cfg=None, layout=None, streams=None):
    """
    FreeMCG feature attribution. For every timestep of the grid, K copies of
    x are forward diffused and denoised, the classifier is evaluated on the
    denoised particles and the ensemble gradient of log p(c|x) is computed.
    The per-timestep gradients are averaged with equal weights and turned
    into a nonnegative map.

    :param m: Black-box classifier, only `eval` is called.
    :param den: Denoiser matching the data distribution.
    :param s: Noise schedule.
    :param x: Input of any shape with m.dim_in entries.
    :param cfg: AttributionConfig.
    :param layout: Input layout used by the postprocessing, default x.shape.
    :param streams: RandomStreams, default derived from cfg.seed.
    :return: AttributionMap with the signed averaged gradient retained.
    """

    cfg = cfg if cfg is not None else AttributionConfig()
    cfg.validate(s)
    streams = streams if streams is not None else RandomStreams(cfg.seed)

    x = np.asarray(x, dtype=float)
    layout = tuple(layout) if layout is not None else x.shape
    x = x.reshape(-1)
    if x.shape[0] != m.dim_in:
        raise InvalidInputError('Input of size {} does not match classifier dimension {}.'.format(x.shape[0], m.dim_in))
    if not np.all(np.isfinite(x)):
        raise InvalidInputError('Input must be finite.')

    p = softmax(m.eval(x))
    pred = int(np.argmax(p))
    c = check_class_index(cfg.target_class if cfg.target_class is not None else pred, m.dim_out)
    w = direction_weight(c, p)
    if c == pred:
        check_sign_structure(w, c)

    with Timer('Computing FreeMCG attribution for class {} over {} timesteps with {} particles each.'.format(
            c, len(cfg.timesteps), cfg.particles_per_t)):
        if cfg.random_t:
            g, degenerate = attribute_random_t(m, den, s, x, c, p, cfg, streams)
        else:
            g, degenerate = attribute_grid(m, den, s, x, c, p, cfg, streams)

    if degenerate:
        logger.warning('Degenerate particle ensemble, all denoised particles coincide at one or more timesteps.')

    a = postprocess(g, layout, target_class=c, degenerate=degenerate)
    if cfg.normalize:
        a = a.normalized()
    return a

def attribute_grid(m, den, s, x, c, p, cfg, streams):
    """
    Averages the ensemble gradients over the timestep grid. Timesteps whose
    denoised particles all coincide are left out of the average and set the
    degenerate flag. When every timestep is degenerate the gradient is zero.
    """
    g = np.zeros_like(x)
    n = 0
    for t in cfg.timesteps:
        xt = forward_diffuse_particles(x, t, s, streams, cfg.particles_per_t, purpose='attribute', indices=(t,))
        x0 = den.denoise(xt, t, s)
        e = ParticleEnsemble.from_classifier(m, x0)
        if e.is_degenerate():
            logger.debug('Timestep {}: degenerate ensemble skipped'.format(t))
            continue
        gt = freemcg_gradient(e, c, p)
        logger.debug('Timestep {}: |g_t|={:.4e}'.format(t, np.linalg.norm(gt)))
        g += gt
        n += 1
    return g / max(n, 1), n < len(cfg.timesteps)

def attribute_random_t(m, den, s, x, c, p, cfg, streams):
    # Every particle draws its own timestep uniformly from the grid range
    n = cfg.particles_per_t * len(cfg.timesteps)
    lo, hi = min(cfg.timesteps), max(cfg.timesteps)
    ts = streams.rng('attribute_t').integers(lo, hi + 1, size=n)
    eps = streams.particle_normal('attribute_t', n, x.shape[0], 1)

    x0 = np.empty((n, x.shape[0]))
    for t in np.unique(ts):
        idx = np.where(ts == t)[0]
        ab = s.alpha_bar_at(int(t))
        xt = np.sqrt(ab) * x[None, :] + np.sqrt(1 - ab) * eps[idx]
        x0[idx] = den.denoise(xt, int(t), s)

    e = ParticleEnsemble.from_classifier(m, x0)
    return freemcg_gradient(e, c, p), e.is_degenerate()
