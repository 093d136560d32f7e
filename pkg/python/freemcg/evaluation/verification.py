import numpy as np

from ..setup_logger import logger
from ..util.randomstreams import RandomStreams
from ..util.timer import Timer
from ..models import LinearSoftmax, QuadraticToyField, ScalarToyWrapper
from ..diffusion import AffineSubspacePrior, make_schedule
from ..enkf import ParticleEnsemble, cov_action_span_check, eigen_action_check, thm2_residual
from ..attribution import AttributionConfig, attribute
from .orderscan import order_scan
from .toy import tangent_toy
from .tangent import tangent_report

def random_ensemble(rng, K, d, n=3):
    return ParticleEnsemble(rng.standard_normal((K, d)), rng.standard_normal((K, n)))

def span_check(streams, trials=200):
    """
    Largest span residual of C_xx b over random ensembles and vectors.
    """
    worst = 0.0
    for i in range(trials):
        rng = streams.rng('verify', 0, i)
        d = int(rng.integers(2, 11))
        K = int(rng.integers(2, 13))
        e = random_ensemble(rng, K, d)
        worst = max(worst, cov_action_span_check(e, rng.standard_normal(d)))
    return worst

def linear_exactness(streams, trials=20):
    worst = 0.0
    for i in range(trials):
        rng = streams.rng('verify', 1, i)
        d = int(rng.integers(1, 33))
        n = int(rng.integers(2, 9))
        K = [3, 10, 100][i % 3]
        m = LinearSoftmax(W=rng.standard_normal((n, d)), b=rng.standard_normal(n))
        e = ParticleEnsemble.from_classifier(m, rng.standard_normal((K, d)))
        worst = max(worst, thm2_residual(m, e))
    return worst

def subspace_attribution(streams, d=10, rank=2, particles=20):
    """
    Off-span ratio of a FreeMCG attribution gradient when the data lives on
    a random plane.
    """
    rng = streams.rng('verify', 2)
    B, _ = np.linalg.qr(rng.standard_normal((d, rank)))
    prior = AffineSubspacePrior(origin=rng.standard_normal(d), basis=B, latent_cov=np.eye(rank))
    m = LinearSoftmax(W=rng.standard_normal((3, d)))
    x = prior.sample(1, rng)[0]
    cfg = AttributionConfig(particles_per_t=particles, seed=streams.seed)
    a = attribute(m, prior, make_schedule(), x, cfg)
    return tangent_report(a.raw_gradient, prior).off_manifold_ratio

def run_verification(seed=0):
    """
    Runs the numerical property checks of the ensemble gradient and returns
    them as a JSON-serializable dictionary.
    """

    streams = RandomStreams(seed)
    with Timer('Running verification checks.'):
        e = random_ensemble(streams.rng('verify', 3), 5, 8)
        eig_residual, eig_tail = eigen_action_check(e)
        scan = order_scan(ScalarToyWrapper(QuadraticToyField()))
        toy = tangent_toy()
        report = {
            'seed': seed,
            'span_check': span_check(streams),
            'linear_residual': linear_exactness(streams),
            'eigen_residual': eig_residual,
            'eigen_tail': eig_tail,
            'order_scan': scan.to_dict(),
            'tangent_toy': toy.to_dict(),
            'subspace_off_span_ratio': subspace_attribution(streams),
        }

    logger.info('Verification: span check {:.3e}, order slope {:.3f}'.format(report['span_check'], scan.slope))
    return report, scan, toy
