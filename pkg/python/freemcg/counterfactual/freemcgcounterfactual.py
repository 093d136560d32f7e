import numpy as np

from ..setup_logger import logger
from ..constants import Constants
from ..errors import InvalidInputError, DivergenceError
from ..util.randomstreams import RandomStreams
from ..util.timer import Timer
from ..models.softmax import softmax
from ..models.oracleclassifier import OracleClassifier
from ..enkf import ParticleEnsemble, direction_weight, freemcg_gradient
from ..diffusion import forward_diffuse_particles, ddim_step
from .cfconfig import CfConfig
from .counterfactualresult import CounterfactualResult

def normalize_gradient(g, eps=Constants.NORMALIZE_EPS):
    """
    Returns g with unit L2 norm, or zeros when the norm is below eps.
    """
    g = np.asarray(g, dtype=float)
    n = np.linalg.norm(g)
    if n > eps:
        return g / n
    return np.zeros_like(g)

def _check_input(m, x):
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.shape[0] != m.dim_in:
        raise InvalidInputError('Input of size {} does not match classifier dimension {}.'.format(x.shape[0], m.dim_in))
    if not np.all(np.isfinite(x)):
        raise InvalidInputError('Input must be finite.')
    return x

def _check_divergence(y, limit, step):
    n = np.max(np.linalg.norm(np.atleast_2d(y), axis=-1))
    if not np.isfinite(n) or n > limit:
        raise DivergenceError('Counterfactual iterate norm {:.3e} exceeds {:.3e} at step {}.'.format(n, limit, step))

def ascent_cf(m, den, s, x, cfg, x_init=None, streams=None):
    """
    Direct FreeMCG ascent towards the target class c':

        x_{i+1} = x_i + alpha g(x_i) + beta (x - x_i)

    where g is the ensemble gradient of log p(c'|x_i) from K particles
    forward diffused to t_start and denoised.

    :param x_init: Starting iterate, defaults to x.
    """

    cfg.validate(s, m.dim_out)
    streams = streams if streams is not None else RandomStreams(cfg.seed)
    x = _check_input(m, x)
    xi = x.copy() if x_init is None else _check_input(m, x_init).copy()
    c = int(cfg.target_class)
    grad_norm = cfg.use_grad_norm('ascent')
    limit = Constants.DIVERGENCE_FACTOR * max(np.linalg.norm(x), 1.0)

    trajectory = [xi.copy()]
    logits, weights, probs = [], [], []

    with Timer('Running FreeMCG ascent for {} iterations towards class {}.'.format(cfg.iters, c)):
        for i in range(cfg.iters):
            l = m.eval(xi)
            p = softmax(l)
            w = direction_weight(c, p)
            logits.append(l)
            probs.append(p)
            weights.append(w)

            g = np.zeros_like(xi)
            if cfg.alpha > 0:
                xt = forward_diffuse_particles(xi, cfg.t_start, s, streams, cfg.K, purpose='ascent', indices=(i,))
                x0 = den.denoise(xt, cfg.t_start, s)
                g = freemcg_gradient(ParticleEnsemble.from_classifier(m, x0), c, p)
                if grad_norm:
                    g = normalize_gradient(g)

            xi = xi + cfg.alpha * g + cfg.beta * (x - xi)
            _check_divergence(xi, limit, i)
            trajectory.append(xi.copy())

            logger.debug('Ascent iteration {}: p[{}]={:.4f}, |g|={:.4e}'.format(i, c, p[c], np.linalg.norm(g)))

    logits.append(m.eval(xi))
    return CounterfactualResult(x=x, x_cf=xi, target_class=c, flipped=m.predict(xi) == c,
                                trajectory=trajectory, logit_history=logits,
                                direction_weights=weights, prob_history=probs)

def reverse_diffusion_cf(m, den, s, x, cfg, streams=None):
    """
    Counterfactual by guided reverse diffusion. K particles are forward
    diffused to t_start, then moved back along the DDIM sub-grid. At every
    step the ensemble gradient is computed from the denoised particles,
    with the direction weight built from the ensemble-mean probabilities,
    and each particle is guided by

        g_k = alpha g + beta (x - x0_k)

    The counterfactual is the mean of the final particles.
    """

    cfg.validate(s, m.dim_out)
    streams = streams if streams is not None else RandomStreams(cfg.seed)
    x = _check_input(m, x)
    c = int(cfg.target_class)
    grad_norm = cfg.use_grad_norm('reverse')
    limit = Constants.DIVERGENCE_FACTOR * max(np.linalg.norm(x), 1.0)

    xk = forward_diffuse_particles(x, cfg.t_start, s, streams, cfg.K, purpose='reverse')
    ts = s.get_ddim_timesteps(cfg.t_start, cfg.n_ddim_steps)

    trajectory = [np.mean(xk, axis=0)]
    logits, weights, probs = [], [], []

    with Timer('Running guided reverse diffusion with {} particles over {} steps towards class {}.'.format(
            cfg.K, ts.shape[0], c)):
        for i, t in enumerate(ts):
            t_prev = int(ts[i + 1]) if i + 1 < ts.shape[0] else -1

            x0 = den.denoise(xk, t, s)
            eps = den.implied_eps(xk, t, s, x0_hat=x0)
            lk = m.eval(x0)
            pk = softmax(lk)
            p = np.mean(pk, axis=0)
            p = p / np.sum(p)
            w = direction_weight(c, p)
            logits.append(np.mean(lk, axis=0))
            probs.append(p)
            weights.append(w)

            g = np.zeros(x.shape)
            if cfg.alpha > 0:
                g = freemcg_gradient(ParticleEnsemble(x0, lk), c, p)
                if grad_norm:
                    g = normalize_gradient(g)

            # Shared ensemble gradient, particle-specific proximal term
            gk = cfg.alpha * g[None, :] + cfg.beta * (x[None, :] - x0)

            noise = None
            if cfg.ddim.eta > 0:
                noise = streams.particle_normal('ddim', cfg.K, x.shape[0], int(t))

            xk = ddim_step(xk, x0, eps, t, s, cfg.ddim, g=gk, noise=noise, t_prev=t_prev)
            _check_divergence(xk, limit, i)
            trajectory.append(np.mean(xk, axis=0))

            logger.debug('Reverse step t={}: mean p[{}]={:.4f}, |g|={:.4e}'.format(t, c, p[c], np.linalg.norm(g)))

    x_cf = np.mean(xk, axis=0)
    logits.append(m.eval(x_cf))
    result = CounterfactualResult(x=x, x_cf=x_cf, target_class=c, flipped=m.predict(x_cf) == c,
                                  trajectory=trajectory, logit_history=logits,
                                  direction_weights=weights, prob_history=probs)
    result.particles = xk
    return result

def generate_counterfactual(m, den, s, x, cfg, streams=None):
    """
    Dispatches on cfg.mode.
    """
    if cfg.mode == 'ascent':
        return ascent_cf(m, den, s, x, cfg, streams=streams)
    elif cfg.mode == 'reverse':
        return reverse_diffusion_cf(m, den, s, x, cfg, streams=streams)
    elif cfg.mode == 'gradient':
        return gradient_ascent_cf(m, x, cfg)
    else:
        raise InvalidInputError('Unknown counterfactual mode `{}`.'.format(cfg.mode))

def regeneration_baseline(m, den, s, x, cfg, streams=None):
    """
    Unguided SDEdit-style regeneration of x with the same particle setup,
    i.e. reverse diffusion with alpha = beta = 0.
    """
    cfg = CfConfig(orig=cfg)
    cfg.alpha = 0.0
    cfg.beta = 0.0
    return reverse_diffusion_cf(m, den, s, x, cfg, streams=streams)

def gradient_ascent_cf(m, x, cfg, x_init=None):
    """
    Baseline ascent with the classifier's own gradient in place of the
    ensemble gradient:

        x_{i+1} = x_i + alpha grad log p(c'|x_i) + beta (x - x_i)

    Nothing keeps the iterates near the data, so they typically leave it.
    Needs a classifier with an analytic Jacobian.
    """

    if not isinstance(m, OracleClassifier):
        raise InvalidInputError('Gradient ascent needs a classifier with an analytic Jacobian.')
    cfg.validate(None, m.dim_out)
    x = _check_input(m, x)
    xi = x.copy() if x_init is None else _check_input(m, x_init).copy()
    c = int(cfg.target_class)
    grad_norm = cfg.use_grad_norm('gradient')
    limit = Constants.DIVERGENCE_FACTOR * max(np.linalg.norm(x), 1.0)

    trajectory = [xi.copy()]
    logits, weights, probs = [], [], []

    with Timer('Running oracle-gradient ascent for {} iterations towards class {}.'.format(cfg.iters, c)):
        for i in range(cfg.iters):
            l = m.eval(xi)
            p = softmax(l)
            logits.append(l)
            probs.append(p)
            weights.append(direction_weight(c, p))

            g = m.log_prob_gradient(xi, c)
            if grad_norm:
                g = normalize_gradient(g)

            xi = xi + cfg.alpha * g + cfg.beta * (x - xi)
            _check_divergence(xi, limit, i)
            trajectory.append(xi.copy())

    logits.append(m.eval(xi))
    return CounterfactualResult(x=x, x_cf=xi, target_class=c, flipped=m.predict(xi) == c,
                                trajectory=trajectory, logit_history=logits,
                                direction_weights=weights, prob_history=probs)
