import numpy as np

class CounterfactualResult():
    """
    Final counterfactual point with its trajectory and the quantities logged
    along the way.
    """

    def __init__(self, x=None, x_cf=None, target_class=None, flipped=None, trajectory=None,
                 logit_history=None, direction_weights=None, prob_history=None, orig=None):
        if isinstance(orig, CounterfactualResult):
            self.x = orig.x
            self.x_cf = orig.x_cf
            self.target_class = orig.target_class
            self.flipped = orig.flipped
            self.l2 = orig.l2
            self.trajectory = orig.trajectory
            self.logit_history = orig.logit_history
            self.direction_weights = orig.direction_weights
            self.prob_history = orig.prob_history
        else:
            self.x = np.asarray(x, dtype=float)
            self.x_cf = np.asarray(x_cf, dtype=float)
            self.target_class = target_class
            self.flipped = bool(flipped)
            self.l2 = float(np.linalg.norm(self.x_cf - self.x))
            self.trajectory = trajectory if trajectory is not None else []
            self.logit_history = logit_history if logit_history is not None else []
            self.direction_weights = direction_weights if direction_weights is not None else []
            self.prob_history = prob_history if prob_history is not None else []

    def copy(self):
        return type(self)(orig=self)

    def to_dict(self):
        return {
            'target_class': self.target_class,
            'flipped': self.flipped,
            'l2': self.l2,
            'steps': len(self.trajectory),
            'logits': [np.asarray(l).tolist() for l in self.logit_history],
            'direction_weights': [np.asarray(w).tolist() for w in self.direction_weights],
        }
