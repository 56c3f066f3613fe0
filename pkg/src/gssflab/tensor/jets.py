# -*- coding:utf-8 -*-
"""Forward-mode jets of analytic fields up to order 3."""

import itertools
from dataclasses import dataclass
from typing import Callable, Tuple

import torch
from torch.func import jacfwd

from gssflab.errors import FieldEvaluationError
from gssflab.utils import as_point

__all__ = ["ScalarJet", "differentiate_field", "jet_derivatives", "symmetrize"]

MAX_ORDER = 3


def symmetrize(t: torch.Tensor, start: int = 0) -> torch.Tensor:
    """Average over all permutations of the trailing axes from ``start`` on."""
    axes = list(range(start, t.dim()))
    if len(axes) < 2:
        return t
    perms = list(itertools.permutations(axes))
    head = list(range(start))
    acc = torch.zeros_like(t)
    for perm in perms:
        acc = acc + t.permute(*(head + list(perm)))
    return acc / len(perms)


def jet_derivatives(f: Callable, p: torch.Tensor, order: int):
    """Return ``[f(p), Df(p), D²f(p), ...]`` up to ``order``.

    Derivative axes are appended after the output axes of ``f``; each order is
    symmetrised over its derivative axes so mixed partials agree exactly.
    """
    p = as_point(p)
    out = [f(p)]
    fn = f
    for k in range(1, order + 1):
        fn = jacfwd(fn)
        d = fn(p)
        out.append(symmetrize(d, d.dim() - k))
    return out


@dataclass(frozen=True)
class ScalarJet:
    """Value and coordinate partials of a scalar field at one point.

    ``partials[k-1]`` is the order-k derivative array of shape ``(dim,) * k``.
    """

    value: float
    partials: Tuple[torch.Tensor, ...]

    @property
    def order(self):
        return len(self.partials)

    def gradient(self):
        return self.partials[0]

    def partial(self, *idx):
        if not idx:
            return self.value
        return float(self.partials[len(idx) - 1][tuple(idx)])


def differentiate_field(f: Callable, p, order: int = 1) -> ScalarJet:
    if not 1 <= order <= MAX_ORDER:
        raise ValueError("order must be in 1..{0}, got {1}".format(MAX_ORDER, order))
    p = as_point(p)
    with torch.no_grad():
        v = torch.as_tensor(f(p))
    if v.numel() != 1 or not bool(torch.isfinite(v).all()):
        raise FieldEvaluationError("scalar field is not finite", p)
    vals = jet_derivatives(f, p, order)
    return ScalarJet(float(vals[0]), tuple(vals[1:]))
