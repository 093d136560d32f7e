from .noiseschedule import NoiseSchedule, make_schedule
from .forward import forward_diffuse, forward_diffuse_particles
from .denoiser import Denoiser
from .tabulateddenoiser import TabulatedDenoiser
from .prior import Prior
from .gaussianmixtureprior import GaussianMixturePrior, gmm_denoise
from .affinesubspaceprior import AffineSubspacePrior, subspace_denoise
from .ddim import DdimParams, ddim_step, guidance_scale, unguided_reverse_diffusion, sdedit_reconstruction

PRIORS = {
    'gmm': GaussianMixturePrior,
    'subspace': AffineSubspacePrior,
}
