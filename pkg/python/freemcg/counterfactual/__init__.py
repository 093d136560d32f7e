from .cfconfig import CfConfig
from .counterfactualresult import CounterfactualResult
from .freemcgcounterfactual import normalize_gradient, ascent_cf, reverse_diffusion_cf, \
    generate_counterfactual, regeneration_baseline, gradient_ascent_cf
