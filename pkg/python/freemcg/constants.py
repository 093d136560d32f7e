FREEMCG_LOGNAME = 'freemcg'

class Constants():
    # Linear beta schedule
    DEFAULT_T = 1000
    DEFAULT_BETA_MIN = 1e-4
    DEFAULT_BETA_MAX = 0.02

    # Feature attribution
    DEFAULT_ATTRIBUTION_TIMESTEPS = (100, 200, 300, 400, 500, 600, 700)
    DEFAULT_PARTICLES = 100

    # Counterfactual generation
    DEFAULT_CF_T_START = 400
    DEFAULT_CF_ALPHA = 0.2
    DEFAULT_CF_BETA = 0.01
    DEFAULT_CF_ITERS = 18
    DEFAULT_DDIM_STEPS = 100
    DEFAULT_DDIM_ETA = 0.0
    DIVERGENCE_FACTOR = 1e3

    # ROAD
    DEFAULT_ROAD_FRACTIONS = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    DEFAULT_ROAD_NOISE_STD = 0.05

    # Theorem verification
    DEFAULT_ORDER_SCAN_DELTAS = (0.2, 0.1, 0.05, 0.025)
    MATERIALIZE_MAX_DIM = 64

    # Numerical thresholds
    GRAM_SCHMIDT_DROP_TOL = 1e-12
    NORMALIZE_EPS = 1e-12
    FD_STEP = 1e-4
    RESIDUAL_FLOOR = 1e-13

    # Sweeps
    DEFAULT_SWEEP_MAX_POINTS = 64

    # Stable integer identifiers of the random sub-streams
    RANDOM_PURPOSES = {
        'forward': 1,
        'attribute': 2,
        'attribute_t': 3,
        'ascent': 4,
        'reverse': 5,
        'ddim': 6,
        'impute': 7,
        'road': 8,
        'random_map': 9,
        'ensemble': 10,
        'toy': 11,
        'verify': 12,
        'sample': 13,
    }
