from .particleensemble import ParticleEnsemble
from .ensemblestats import EnsembleStats, ensemble_stats
from .freemcg import direction_weight, freemcg_gradient, freemcg_covariance_gradient
from .verification import thm2_residual, cov_action_span_check, eigen_action_check
