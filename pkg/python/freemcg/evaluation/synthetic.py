import numpy as np

from ..models import LinearSoftmax, RbfSoftmax
from ..diffusion import GaussianMixturePrior

class SyntheticTask():
    """
    A classifier, a matching analytic prior and a reference input of a known
    class, for harness runs at desk scale.
    """

    def __init__(self, classifier=None, prior=None, x=None, label=None, target_class=None, templates=None):
        self.classifier = classifier
        self.prior = prior
        self.x = x
        self.label = label
        self.target_class = target_class
        self.templates = templates

    def sample(self, rng, label=None):
        """
        Draws an input of the given class from the prior component.
        """
        label = self.label if label is None else label
        return self.prior.component_sample(label, 1, rng)[0]

def two_class_gmm_task(separation=4.0, spread=4.0, bandwidth=np.sqrt(8.0)):
    """
    Two isotropic Gaussian classes centered at (-separation, 0) and
    (separation, 0) with an RBF classifier on the same centers. The logit
    difference is linear in the first coordinate, the decision boundary is
    x = 0. The reference input is the center of class 0, the target class 1.
    """
    centers = np.array([[-separation, 0.0], [separation, 0.0]])
    prior = GaussianMixturePrior(weights=[0.5, 0.5], means=centers, covs=spread ** 2 * np.eye(2))
    m = RbfSoftmax(centers=centers, bandwidth=bandwidth)
    return SyntheticTask(classifier=m, prior=prior, x=centers[0].copy(), label=0, target_class=1)

def blob_template(size, center, sigma):
    r, c = np.meshgrid(np.arange(size), np.arange(size), indexing='ij')
    return np.exp(-((r - center[0]) ** 2 + (c - center[1]) ** 2) / (2 * sigma ** 2))

def blob_task(size=16, sigma=1.5, gain=1.5, noise=0.1, positions=((8, 4), (8, 11))):
    """
    Grayscale images of a single Gaussian blob at one of the given positions.
    The class is the blob position. The classifier is linear with rows
    proportional to the normalized templates, the prior a mixture of the
    templates with isotropic pixel noise.
    """
    templates = np.stack([blob_template(size, p, sigma) for p in positions])
    flat = templates.reshape(templates.shape[0], -1)
    W = gain * flat / np.linalg.norm(flat, axis=1, keepdims=True)
    m = LinearSoftmax(W=W, b=np.zeros(W.shape[0]))
    d = flat.shape[1]
    prior = GaussianMixturePrior(weights=np.full(flat.shape[0], 1.0 / flat.shape[0]),
                                 means=flat, covs=noise ** 2 * np.eye(d))
    return SyntheticTask(classifier=m, prior=prior, x=templates[0].copy(), label=0,
                         target_class=1, templates=templates)
