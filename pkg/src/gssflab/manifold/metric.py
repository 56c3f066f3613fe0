# -*- coding:utf-8 -*-
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import torch

from gssflab.errors import MetricInversionError
from gssflab.tensor import DOWN, TensorValue, invert_metric
from gssflab.utils import as_point, sample_points

__all__ = ["MetricModel", "DEFAULT_BOX"]

DEFAULT_BOX = (-1.0, 1.0)
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class MetricModel:
    """Analytic Riemannian metric on a single chart.

    ``components`` maps a float64 point of shape ``(dim,)`` to the symmetric
    ``(dim, dim)`` matrix ``g_ij``. It must be written with torch operations
    only so that nested ``jacfwd`` can differentiate it.
    """

    dim: int
    components: Callable[[torch.Tensor], torch.Tensor]
    sample_box: Tuple[Tuple[float, float], ...] = field(default=())
    name: Optional[str] = None

    def __post_init__(self):
        box = tuple(tuple(map(float, b)) for b in self.sample_box) or (DEFAULT_BOX,) * self.dim
        if len(box) != self.dim:
            raise ValueError("sample_box needs one interval per coordinate")
        object.__setattr__(self, "sample_box", box)

    def __call__(self, p) -> torch.Tensor:
        return self.components(as_point(p))

    def at(self, p) -> TensorValue:
        return TensorValue(self.dim, (DOWN, DOWN), self(p))

    def inverse(self, p) -> torch.Tensor:
        return invert_metric(self.check(p))

    def check(self, p) -> torch.Tensor:
        """Return ``g(p)`` after verifying symmetry and positive-definiteness."""
        g = self(p)
        if float((g - g.T).abs().max()) > SYMMETRY_TOL:
            raise MetricInversionError("metric is not symmetric", float("nan"))
        _, info = torch.linalg.cholesky_ex(g)
        if int(info) != 0:
            cond = float(torch.linalg.cond(g))
            raise MetricInversionError(
                "metric is not positive definite at {0}".format(as_point(p).tolist()), cond
            )
        return g

    def sample(self, count, seed, box: Optional[Sequence] = None) -> torch.Tensor:
        return sample_points(box or self.sample_box, count, seed)

    def with_box(self, box) -> "MetricModel":
        return MetricModel(self.dim, self.components, tuple(box), self.name)
