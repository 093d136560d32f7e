import numpy as np

from ..errors import InvalidInputError

def flip_rate(results):
    """
    Fraction of counterfactuals classified as their target class.
    """
    results = list(results)
    if len(results) == 0:
        raise InvalidInputError('Flip rate of an empty result list.')
    return float(np.mean([r.flipped for r in results]))

def mean_l2(results):
    results = list(results)
    if len(results) == 0:
        raise InvalidInputError('Mean distance of an empty result list.')
    return float(np.mean([r.l2 for r in results]))

def mean_log_density(results, prior):
    """
    Mean prior log-density of the counterfactual points, a realism measure
    to read together with flip rate and distance.
    """
    results = list(results)
    if len(results) == 0:
        raise InvalidInputError('Mean log-density of an empty result list.')
    return float(np.mean([prior.log_pdf(r.x_cf) for r in results]))
