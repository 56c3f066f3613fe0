# -*- coding:utf-8 -*-
"""Levi-Civita connection and curvature of a chart metric.

Sign convention: R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]. Arrays use
``riemann13[l, i, j, k] = (R(∂i, ∂j)∂k)^l`` and
``riemann04[i, j, k, w] = g(R(∂i, ∂j)∂k, ∂w)``.
"""

from dataclasses import dataclass
from typing import Callable, Sequence

import torch
from torch.func import jacfwd

from gssflab.tensor import DOWN, UP, TensorValue, contract
from gssflab.utils import as_point

from .metric import MetricModel

__all__ = [
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


def christoffel_fn(metric: Callable) -> Callable:
    """Pure ``p -> Γ[k, i, j]`` for a metric callable; safe under ``jacfwd``."""

    def gamma(p):
        g = metric(p)
        dg = jacfwd(metric)(p)  # dg[a, b, c] = ∂c g_ab
        ginv = torch.linalg.inv(g)
        term = (
            torch.einsum("jli->ijl", dg)
            + torch.einsum("ilj->ijl", dg)
            - dg
        )
        out = 0.5 * torch.einsum("kl,ijl->kij", ginv, term)
        return 0.5 * (out + out.transpose(1, 2))

    return gamma


def riemann_fn(metric: Callable) -> Callable:
    gamma = christoffel_fn(metric)

    def riemann(p):
        G = gamma(p)
        dG = jacfwd(gamma)(p)  # dG[l, j, k, i] = ∂i Γ^l_jk
        return (
            torch.einsum("ljki->lijk", dG)
            - torch.einsum("likj->lijk", dG)
            + torch.einsum("lim,mjk->lijk", G, G)
            - torch.einsum("ljm,mik->lijk", G, G)
        )

    return riemann


def christoffel(m: MetricModel, p) -> torch.Tensor:
    p = as_point(p)
    m.inverse(p)
    return christoffel_fn(m.components)(p)


@dataclass(frozen=True)
class CurvatureBundle:
    gamma: torch.Tensor
    riemann13: TensorValue
    riemann04: TensorValue
    ricci: TensorValue
    scalar: float
    metric: torch.Tensor

    def riemann_vector(self, X, Y, Z) -> torch.Tensor:
        return torch.einsum("lijk,i,j,k->l", self.riemann13.entries, X, Y, Z)

    def bianchi_residual(self) -> float:
        R = self.riemann04.entries
        cyc = R + torch.einsum("jkiw->ijkw", R) + torch.einsum("kijw->ijkw", R)
        return float(cyc.abs().max())

    def symmetry_residual(self) -> float:
        R = self.riemann04.entries
        return max(
            float((R + R.transpose(0, 1)).abs().max()),
            float((R + R.transpose(2, 3)).abs().max()),
            float((R - R.permute(2, 3, 0, 1)).abs().max()),
        )

    def concircular(self) -> torch.Tensor:
        """Concircular curvature R - r/(N(N-1)) (g(Y,Z)X - g(X,Z)Y), riemann13 layout."""
        g = self.metric
        dim = g.shape[0]
        eye = torch.eye(dim, dtype=g.dtype)
        block = torch.einsum("jk,li->lijk", g, eye) - torch.einsum("ik,lj->lijk", g, eye)
        return self.riemann13.entries - self.scalar / (dim * (dim - 1)) * block


def curvature_bundle(m: MetricModel, p) -> CurvatureBundle:
    p = as_point(p)
    g = m.check(p)
    ginv = m.inverse(p)
    gamma = christoffel_fn(m.components)(p)
    rm = riemann_fn(m.components)(p)
    r13 = TensorValue(m.dim, (UP, DOWN, DOWN, DOWN), rm)
    r04 = TensorValue(m.dim, (DOWN,) * 4, torch.einsum("lijk,lw->ijkw", rm, g))
    ricci = contract(r13, 0, 1)
    scalar = float(torch.einsum("jk,jk->", ginv, ricci.entries))
    return CurvatureBundle(gamma, r13, r04, ricci, scalar, g)


def _nabla_components(T, dT, gamma, slots):
    # dT carries the derivative index last; Γ terms are added per slot
    out = dT
    for s, variance in enumerate(slots):
        X = torch.movedim(T, s, -1)
        if variance == UP:
            term = torch.einsum("...m,acm->...ac", X, gamma)
        else:
            term = -torch.einsum("...m,mcb->...bc", X, gamma)
        out = out + torch.movedim(term, -2, s)
    return out


def nabla(field: Callable, slots: Sequence[str], metric: Callable) -> Callable:
    """Pure ``p -> ∇T(p)`` with the derivative slot appended last."""
    gamma = christoffel_fn(metric)
    slots = tuple(slots)

    def nabla_t(p):
        return _nabla_components(field(p), jacfwd(field)(p), gamma(p), slots)

    return nabla_t


def covariant_derivative(field: Callable, slots: Sequence[str], m: MetricModel, p) -> TensorValue:
    p = as_point(p)
    m.inverse(p)
    out = nabla(field, slots, m.components)(p)
    return TensorValue(m.dim, tuple(slots) + (DOWN,), out)


def lie_bracket(X: Callable, Y: Callable, p) -> torch.Tensor:
    p = as_point(p)
    return jacfwd(Y)(p) @ X(p) - jacfwd(X)(p) @ Y(p)


def _directional(metric, V, W):
    nv = nabla(V, (UP,), metric)
    return lambda q: nv(q) @ W(q)


def curvature_operator(m: MetricModel, X: Callable, Y: Callable, Z: Callable, p) -> torch.Tensor:
    """R(X,Y)Z from the operator definition on vector fields."""
    p = as_point(p)
    m.inverse(p)
    metric = m.components
    xy = _directional(metric, _directional(metric, Z, Y), X)(p)
    yx = _directional(metric, _directional(metric, Z, X), Y)(p)
    br = lie_bracket(X, Y, p)
    bracket_term = nabla(Z, (UP,), metric)(p) @ br
    return xy - yx - bracket_term
