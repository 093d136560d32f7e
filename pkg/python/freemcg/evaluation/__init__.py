from .imputation import noisy_linear_impute
from .roadcurve import RoadCurve, road_curve, removal_order
from .metrics import flip_rate, mean_l2, mean_log_density
from .tangent import TangentReport, tangent_report, tangent_alignment
from .orderscan import OrderScanReport, order_scan, fit_slope
from .toy import TangentToyReport, tangent_toy
from .synthetic import SyntheticTask, two_class_gmm_task, blob_task
from .verification import run_verification
