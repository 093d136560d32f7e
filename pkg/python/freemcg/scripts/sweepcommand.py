import itertools
import numpy as np
import pandas as pd

from ..setup_logger import logger
from ..constants import Constants
from ..errors import ConfigError, InvalidInputError
from ..util import SmartParallel, RandomStreams
from ..diffusion.ddim import DdimParams
from ..counterfactual import CfConfig, generate_counterfactual
from ..attribution import AttributionConfig, attribute
from ..evaluation import flip_rate, mean_l2, mean_log_density, road_curve
from .command import Command

def run_seed(seed, i, r):
    """
    Seed of run r on input i. It does not depend on the grid point, so all
    points see the same noise.
    """
    ss = RandomStreams(seed).get_seed_sequence('sample', i, r)
    return int(ss.generate_state(1, dtype=np.uint64)[0])

def sweep_worker(point, m, prior, s, X, runs, seed, base, road):
    """
    Evaluates one grid point over all inputs and runs.
    """
    cfg = CfConfig(orig=base)
    cfg.ddim = DdimParams(eta=point['eta'])
    cfg.alpha = point['alpha']
    cfg.beta = point['beta']
    cfg.t_start = point['t_start']
    cfg.K = point['particles']

    results, aucs = [], []
    for i, x in enumerate(X):
        for r in range(runs):
            cfg.seed = run_seed(seed, i, r)
            results.append(generate_counterfactual(m, prior, s, x, cfg))
            if road:
                acfg = AttributionConfig(particles_per_t=cfg.K, seed=cfg.seed)
                a = attribute(m, prior, s, x, acfg)
                aucs.append(road_curve(m, x, a, seed=cfg.seed).auc)

    row = dict(point)
    row['flip_rate'] = flip_rate(results)
    row['mean_l2'] = mean_l2(results)
    try:
        row['mean_log_density'] = mean_log_density(results, prior)
    except InvalidInputError:
        # Flat subspace priors have no density
        row['mean_log_density'] = np.nan
    row['auc'] = float(np.mean(aucs)) if road else np.nan
    return row

class SweepCommand(Command):
    """
    Runs counterfactual generation over the Cartesian product of parameter
    lists and aggregates flip rate, distance, prior log-density and
    optionally the ROAD AUC into a CSV table.
    """

    GRID = ['alpha', 'beta', 't_start', 'particles', 'eta']

    def __init__(self, orig=None):
        super().__init__(orig=orig)

        if not isinstance(orig, SweepCommand):
            self.base = CfConfig()
            self.grid = {
                'alpha': [Constants.DEFAULT_CF_ALPHA],
                'beta': [Constants.DEFAULT_CF_BETA],
                't_start': [Constants.DEFAULT_CF_T_START],
                'particles': [Constants.DEFAULT_PARTICLES],
                'eta': [Constants.DEFAULT_DDIM_ETA],
            }
            self.runs = 1
            self.max_points = Constants.DEFAULT_SWEEP_MAX_POINTS
            self.road = False
        else:
            self.base = orig.base.copy()
            self.grid = dict(orig.grid)
            self.runs = orig.runs
            self.max_points = orig.max_points
            self.road = orig.road

    def add_args(self, parser):
        super().add_args(parser)
        self.add_model_args(parser)
        parser.add_argument('--mode', type=str, choices=CfConfig.MODES, help='FreeMCG ascent, guided reverse diffusion or oracle-gradient ascent.\n')
        parser.add_argument('--target-class', type=int, help='Class the counterfactuals should reach.\n')
        parser.add_argument('--alpha', type=float, nargs='+', help='Gradient step weights.\n')
        parser.add_argument('--beta', type=float, nargs='+', help='Proximal weights.\n')
        parser.add_argument('--t-start', type=int, nargs='+', help='Forward diffusion depths.\n')
        parser.add_argument('--particles', type=int, nargs='+', help='Particle counts.\n')
        parser.add_argument('--eta', type=float, nargs='+', help='DDIM stochasticity values.\n')
        parser.add_argument('--ddim-steps', type=int, help='Number of reverse DDIM steps.\n')
        parser.add_argument('--iters', type=int, help='Number of ascent iterations.\n')
        parser.add_argument('--grad-norm', action='store_true', dest='grad_norm', default=None, help='Normalize the ensemble gradient.\n')
        parser.add_argument('--no-grad-norm', action='store_false', dest='grad_norm', default=None, help='Use the raw ensemble gradient.\n')
        parser.add_argument('--runs', type=int, help='Seeded runs per input and grid point.\n')
        parser.add_argument('--max-points', type=int, help='Largest allowed number of grid points.\n')
        parser.add_argument('--road', action='store_true', help='Also evaluate the ROAD AUC of FreeMCG maps.\n')

    def init_from_args(self, script, args):
        super().init_from_args(script, args)

        self.base.mode = self.get_arg('mode', self.base.mode)
        self.base.target_class = self.require_arg('target_class')
        self.base.n_ddim_steps = self.get_arg('ddim_steps', self.base.n_ddim_steps)
        self.base.iters = self.get_arg('iters', self.base.iters)
        self.base.grad_norm = self.get_arg('grad_norm', self.base.grad_norm)
        for k in SweepCommand.GRID:
            v = self.get_arg(k, self.grid[k])
            self.grid[k] = list(v) if isinstance(v, (list, tuple)) else [v]
        self.runs = self.get_arg('runs', self.runs)
        self.max_points = self.get_arg('max_points', self.max_points)
        self.road = self.get_arg('road', self.road)

        if self.runs < 1:
            raise ConfigError('Number of runs must be positive.')

    def validate(self):
        self.get_points()
        super().validate()

    def get_points(self):
        if any(len(self.grid[k]) == 0 for k in SweepCommand.GRID):
            raise ConfigError('Sweep grid must not be empty.')
        n = int(np.prod([len(self.grid[k]) for k in SweepCommand.GRID]))
        if n > self.max_points:
            raise ConfigError('Sweep grid has {} points, more than the limit of {}. Raise `--max-points` to allow it.'.format(
                n, self.max_points))
        return [dict(zip(SweepCommand.GRID, v)) for v in itertools.product(*[self.grid[k] for k in SweepCommand.GRID])]

    def run(self):
        points = self.get_points()
        X = self.load_input()
        m = self.load_classifier()
        prior = self.load_prior()
        s = self.create_schedule()

        X = X.reshape(-1, m.dim_in)
        logger.info('Sweeping {} grid points over {} inputs with {} runs each.'.format(len(points), X.shape[0], self.runs))

        parallel = self.threads is not None and self.threads > 1
        with SmartParallel(verbose=True, parallel=parallel, threads=self.threads) as p:
            rows = list(p.map(sweep_worker, points, m, prior, s, X, self.runs, self.seed, self.base, self.road))

        df = pd.DataFrame(rows, columns=SweepCommand.GRID + ['flip_rate', 'mean_l2', 'mean_log_density', 'auc'])
        self.save_csv('sweep.csv', df)
        return self.outputs
