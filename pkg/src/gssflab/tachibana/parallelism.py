# -*- coding:utf-8 -*-
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

import torch
from tqdm import tqdm

from gssflab.errors import CatalogError
from gssflab.submanifold import PointGeometry, as_sigma, point_geometry
from gssflab.utils import logger, max_abs

from .curvature import dot_nabla_sigma_tensor, dot_sigma_tensor
from .operators import METRIC, RICCI, BilinearInput, q_tensor

__all__ = [
    "ParallelismResidual",
    "PARALLELISM_KINDS",
    "PSEUDO_KINDS",
    "parallelism_tensor",
    "frame_tensor",
    "parallelism_residual",
]


def _q_sigma(E, geo):
    return q_tensor(E, geo.sigma, 2).permute(2, 3, 0, 1, 4)


def _q_nabla(E, geo):
    return q_tensor(E, geo.nabla_sigma, 3).permute(3, 4, 0, 1, 2, 5)


def _metric(geo):
    return BilinearInput(geo.G, METRIC)


def _ricci(geo):
    S = geo.amb_ricci
    return BilinearInput(0.5 * (S + S.T), RICCI)


PARALLELISM_KINDS = OrderedDict(
    [
        ("parallel", lambda geo, L1: geo.nabla_sigma),
        ("semi", lambda geo, L1: dot_sigma_tensor(geo, geo.riemann)),
        ("2-semi", lambda geo, L1: dot_nabla_sigma_tensor(geo, geo.riemann)),
        ("pseudo", lambda geo, L1: dot_sigma_tensor(geo, geo.riemann) - L1 * _q_sigma(_metric(geo), geo)),
        ("ricci-pseudo", lambda geo, L1: dot_sigma_tensor(geo, geo.riemann) - L1 * _q_sigma(_ricci(geo), geo)),
        ("concircular-semi", lambda geo, L1: dot_sigma_tensor(geo, geo.amb_concircular)),
        ("concircular-2-semi", lambda geo, L1: dot_nabla_sigma_tensor(geo, geo.amb_concircular)),
        ("2-pseudo", lambda geo, L1: dot_nabla_sigma_tensor(geo, geo.riemann) - L1 * _q_nabla(_ricci(geo), geo)),
    ]
)
PSEUDO_KINDS = ("pseudo", "ricci-pseudo", "2-pseudo")


@dataclass(frozen=True)
class ParallelismResidual:
    kind: str
    L1: Optional[float]
    value: float
    xi_value: float
    samples: int


def parallelism_tensor(kind: str, geo: PointGeometry, L1: Optional[float] = None) -> torch.Tensor:
    """Left-minus-right side of the defining condition, as a component array."""
    if kind not in PARALLELISM_KINDS:
        raise CatalogError("parallelism kind", kind, PARALLELISM_KINDS)
    if kind in PSEUDO_KINDS and L1 is None:
        raise ValueError("kind {0!r} needs L1".format(kind))
    return PARALLELISM_KINDS[kind](geo, L1)


def frame_tensor(T: torch.Tensor, frame: torch.Tensor, slots: int) -> torch.Tensor:
    """Evaluate every leading slot on every row of ``frame``."""
    out = T
    for s in range(slots):
        out = torch.movedim(torch.tensordot(frame, out, dims=([1], [s])), 0, s)
    return out


def parallelism_residual(kind, sigma, L1=None, samples=50, seed=42, verbose=0) -> ParallelismResidual:
    """Max-abs residual of a parallelism condition over sampled points.

    Tangent slots run over the coordinate frame with ξ appended; ``xi_value``
    restricts the first and last tangent slots to ξ.
    """
    sigma = as_sigma(sigma)
    e = sigma.embedding
    value, xi_value = 0.0, 0.0
    for q in tqdm(e.sample(samples, seed), disable=verbose != 1, desc=kind):
        geo = point_geometry(sigma, q)
        T = parallelism_tensor(kind, geo, L1)
        slots = T.dim() - 1
        frame = torch.cat([torch.eye(geo.m, dtype=T.dtype), geo.xi[None, :]], dim=0)
        F = frame_tensor(T, frame, slots)
        value = max(value, max_abs(F))
        xi_value = max(xi_value, max_abs(F.select(0, geo.m).select(slots - 2, geo.m)))
    logger.debug("{0} residual on {1}: {2:.3e} (ξ slots {3:.3e})".format(kind, e.name, value, xi_value))
    return ParallelismResidual(kind, L1, value, xi_value, int(samples))
