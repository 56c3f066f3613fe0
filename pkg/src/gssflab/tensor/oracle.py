# -*- coding:utf-8 -*-
"""Central finite differences, kept as an independent check on the jets."""

import torch

from gssflab.utils import as_point

__all__ = ["finite_diff", "finite_diff2", "relative_error"]

DEFAULT_STEP = 1.0e-4
RELATIVE_FLOOR = 1.0e-12


def finite_diff(fun, x, h=DEFAULT_STEP):
    """First partials of ``fun`` at ``x``; derivative axis is appended last."""
    x = as_point(x)
    cols = []
    e = torch.zeros_like(x)
    for i in range(x.shape[0]):
        e[i] = 1.0
        f_plus = torch.as_tensor(fun(x + h * e))
        f_minus = torch.as_tensor(fun(x - h * e))
        cols.append(0.5 * (f_plus - f_minus) / h)
        e[i] = 0.0
    return torch.stack(cols, dim=-1)


def finite_diff2(fun, x, h=DEFAULT_STEP):
    return finite_diff(lambda y: finite_diff(fun, y, h), x, h)


def relative_error(a, b, floor=RELATIVE_FLOOR):
    """Largest entrywise |a - b| / max(|a|, |b|, floor)."""
    a = torch.as_tensor(a)
    b = torch.as_tensor(b)
    scale = torch.clamp(torch.maximum(a.abs(), b.abs()), min=floor)
    return float(((a - b).abs() / scale).max())
