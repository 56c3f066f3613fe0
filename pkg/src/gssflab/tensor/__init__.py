from .core import DOWN, UP, TensorValue, contract, invert_metric, metric_adjust
from .jets import ScalarJet, differentiate_field, jet_derivatives, symmetrize
from .oracle import finite_diff, finite_diff2, relative_error

__all__ = [
    "UP",
    "DOWN",
    "TensorValue",
    "contract",
    "metric_adjust",
    "invert_metric",
    "ScalarJet",
    "differentiate_field",
    "jet_derivatives",
    "symmetrize",
    "finite_diff",
    "finite_diff2",
    "relative_error",
]
