from .softmax import softmax, log_softmax, one_hot, oracle_log_prob_gradient
from .classifier import Classifier
from .oracleclassifier import OracleClassifier
from .linearsoftmax import LinearSoftmax
from .rbfsoftmax import RbfSoftmax
from .scalarfield import ScalarField
from .quadratictoyfield import QuadraticToyField
from .lineartoyfield import LinearToyField
from .scalartoywrapper import ScalarToyWrapper

CLASSIFIERS = {
    'linear': LinearSoftmax,
    'rbf': RbfSoftmax,
    'toy': ScalarToyWrapper,
}

def predict(m, x):
    """
    Returns the class index predicted by classifier m at x.
    """
    return m.predict(x)
