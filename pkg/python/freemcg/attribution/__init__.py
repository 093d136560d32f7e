from .attributionconfig import AttributionConfig
from .attributionmap import AttributionMap
from .postprocess import postprocess, spatial_shape
from .freemcgattribution import attribute
from .baselines import baseline_vanilla_gradient, baseline_input_x_gradient, baseline_integrated_gradients, \
    integrated_gradients, random_map
