# -*- coding:utf-8 -*-
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import torch
from torch.func import jacfwd

from gssflab.contact import ModelSpace
from gssflab.errors import ImmersionError
from gssflab.manifold import MetricModel
from gssflab.tensor import DOWN, TensorValue
from gssflab.utils import as_point, sample_points

__all__ = [
    "EmbeddingModel",
    "SubmanifoldFrame",
    "induced_metric",
    "submanifold_frame",
    "normal_candidates",
    "normal_frame_fn",
    "tangent_coords_fn",
]

RANK_TOL = 1e-10
CANDIDATE_TOL = 1e-6


@dataclass(frozen=True)
class EmbeddingModel:
    """Analytic map from an m-dimensional chart into the chart of ``ambient``."""

    map: Callable[[torch.Tensor], torch.Tensor]
    ambient: ModelSpace
    m: int
    sample_box: Tuple[Tuple[float, float], ...] = field(default=())
    name: Optional[str] = None

    def __post_init__(self):
        box = tuple(tuple(map(float, b)) for b in self.sample_box) or ((-1.0, 1.0),) * self.m
        object.__setattr__(self, "sample_box", box)

    @property
    def dim(self):
        return self.ambient.dim

    @property
    def codim(self):
        return self.ambient.dim - self.m

    def __call__(self, q):
        return self.map(as_point(q))

    def jacobian(self, q) -> torch.Tensor:
        return jacfwd(self.map)(as_point(q))

    def induced_fn(self) -> Callable:
        g = self.ambient.metric.components
        emb = self.map

        def induced(q):
            J = jacfwd(emb)(q)
            return J.T @ g(emb(q)) @ J

        return induced

    def induced_model(self) -> MetricModel:
        return MetricModel(self.m, self.induced_fn(), self.sample_box, self.name)

    def check(self, q) -> torch.Tensor:
        """Verify the immersion at ``q`` and return its Jacobian."""
        q = as_point(q)
        J = self.jacobian(q)
        s = torch.linalg.svdvals(J)
        if s.numel() < self.m or float(s[-1]) < RANK_TOL * max(1.0, float(s[0])):
            raise ImmersionError(
                "{0}: Jacobian rank below {1} at {2}".format(self.name, self.m, q.tolist())
            )
        self.ambient.metric.check(self(q))
        return J

    def sample(self, count, seed) -> torch.Tensor:
        return sample_points(self.sample_box, count, seed)


@dataclass(frozen=True)
class SubmanifoldFrame:
    tangent_basis: torch.Tensor  # (d, m), Jacobian columns
    normal_basis: torch.Tensor  # (d, d - m), g-orthonormal

    def residuals(self, g) -> dict:
        T, N = self.tangent_basis, self.normal_basis
        if N.shape[1] == 0:
            return {"tangent_normal": 0.0, "normal_orthonormal": 0.0}
        gram = N.T @ g @ N
        return {
            "tangent_normal": float((T.T @ g @ N).abs().max()),
            "normal_orthonormal": float((gram - torch.eye(N.shape[1], dtype=g.dtype)).abs().max()),
        }


def _mgs(vectors, g, basis):
    # modified Gram–Schmidt in the g inner product
    out = []
    for v in vectors:
        for b in basis + out:
            v = v - (b @ g @ v) * b
        out.append(v / torch.sqrt(v @ g @ v))
    return out


def normal_candidates(e: EmbeddingModel, q) -> Tuple[int, ...]:
    """Ambient coordinate directions completing the tangent space at ``q``.

    Chosen once on concrete values so the differentiated frame has no
    data-dependent branches.
    """
    q = as_point(q)
    J = e.check(q)
    g = e.ambient.metric(e(q))
    basis = _mgs(list(J.T), g, [])
    chosen = []
    eye = torch.eye(e.dim, dtype=g.dtype)
    for i in range(e.dim):
        if len(chosen) == e.codim:
            break
        v = eye[i]
        for b in basis:
            v = v - (b @ g @ v) * b
        nv = float(torch.sqrt(v @ g @ v))
        if nv > CANDIDATE_TOL:
            basis.append(v / nv)
            chosen.append(i)
    return tuple(chosen)


def normal_frame_fn(e: EmbeddingModel, candidates: Tuple[int, ...]) -> Callable:
    """Pure ``q -> N`` with g-orthonormal normal columns, shape ``(d, codim)``."""
    g_fn = e.ambient.metric.components
    emb = e.map
    dim = e.dim

    def frame(q):
        J = jacfwd(emb)(q)
        g = g_fn(emb(q))
        if not candidates:
            return torch.zeros((dim, 0), dtype=J.dtype)
        tangent = _mgs(list(J.T), g, [])
        eye = torch.eye(dim, dtype=J.dtype)
        normals = _mgs([eye[i] for i in candidates], g, tangent)
        return torch.stack(normals, dim=1)

    return frame


def tangent_coords_fn(e: EmbeddingModel) -> Callable:
    """Pure ``q -> L`` with ``L @ v`` the submanifold coordinates of P_T v."""
    g_fn = e.ambient.metric.components
    emb = e.map

    def coords(q):
        J = jacfwd(emb)(q)
        g = g_fn(emb(q))
        G = J.T @ g @ J
        return torch.linalg.solve(G, J.T @ g)

    return coords


def induced_metric(e: EmbeddingModel, q) -> TensorValue:
    q = as_point(q)
    e.check(q)
    return TensorValue(e.m, (DOWN, DOWN), e.induced_fn()(q))


def submanifold_frame(e: EmbeddingModel, q) -> SubmanifoldFrame:
    q = as_point(q)
    J = e.check(q)
    N = normal_frame_fn(e, normal_candidates(e, q))(q)
    return SubmanifoldFrame(J, N)
