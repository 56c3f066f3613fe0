from .core import (
    CurvatureBundle,
    christoffel,
    christoffel_fn,
    covariant_derivative,
    curvature_bundle,
    curvature_operator,
    lie_bracket,
    nabla,
    riemann_fn,
)
from .metric import DEFAULT_BOX, MetricModel

__all__ = [
    "MetricModel",
    "DEFAULT_BOX",
    "CurvatureBundle",
    "christoffel",
    "christoffel_fn",
    "riemann_fn",
    "curvature_bundle",
    "covariant_derivative",
    "nabla",
    "lie_bracket",
    "curvature_operator",
]
