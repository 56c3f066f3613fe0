# -*- coding:utf-8 -*-
"""Curvature derivations acting on σ and ∇̃σ.

For a curvature-like K (the intrinsic R of M or the concircular 𝒞):

    (K(X,Y)·σ)(U,V)    = R⊥(X,Y)σ(U,V) - σ(K(X,Y)U, V) - σ(U, K(X,Y)V)
    (K(X,Y)·∇̃σ)(U,V,W) = R⊥(X,Y)(∇̃σ)(U,V,W) - (∇̃σ)(K(X,Y)U,V,W)
                          - (∇̃σ)(U,K(X,Y)V,W) - (∇̃σ)(U,V,K(X,Y)W)

Component arrays are indexed ``[x, y, u, v, (w,) k]`` with k the ambient
normal component.
"""

import torch

from gssflab.contact import ModelSpace
from gssflab.manifold import curvature_bundle
from gssflab.submanifold import PointGeometry, point_geometry
from gssflab.utils import as_point

from .operators import evaluate

__all__ = [
    "dot_sigma_tensor",
    "dot_nabla_sigma_tensor",
    "r_dot_sigma",
    "r_dot_nabla_sigma",
    "concircular",
    "concircular_tensor",
    "c_dot_sigma",
    "c_dot_nabla_sigma",
]


def dot_sigma_tensor(geo: PointGeometry, K: torch.Tensor) -> torch.Tensor:
    sig = geo.sigma
    return (
        torch.einsum("xykl,uvl->xyuvk", geo.rperp, sig)
        - torch.einsum("cxyu,cvk->xyuvk", K, sig)
        - torch.einsum("cxyv,uck->xyuvk", K, sig)
    )


def dot_nabla_sigma_tensor(geo: PointGeometry, K: torch.Tensor) -> torch.Tensor:
    ns = geo.nabla_sigma
    return (
        torch.einsum("xykl,uvwl->xyuvwk", geo.rperp, ns)
        - torch.einsum("cxyu,cvwk->xyuvwk", K, ns)
        - torch.einsum("cxyv,ucwk->xyuvwk", K, ns)
        - torch.einsum("cxyw,uvck->xyuvwk", K, ns)
    )


def r_dot_sigma(sigma, X, Y, U, V, q) -> torch.Tensor:
    """(R(X,Y)·σ)(U,V) with R the curvature of the induced metric."""
    geo = point_geometry(sigma, q)
    return evaluate(dot_sigma_tensor(geo, geo.riemann), X, Y, U, V)


def r_dot_nabla_sigma(sigma, X, Y, U, V, W, q) -> torch.Tensor:
    geo = point_geometry(sigma, q)
    return evaluate(dot_nabla_sigma_tensor(geo, geo.riemann), X, Y, U, V, W)


def concircular_tensor(space: ModelSpace, p) -> torch.Tensor:
    return curvature_bundle(space.metric, as_point(p)).concircular()


def concircular(space: ModelSpace, X, Y, Z, p) -> torch.Tensor:
    """𝒞(X,Y)Z = R̃(X,Y)Z - r/(2n(2n+1)) [g(Y,Z)X - g(X,Z)Y]."""
    C = concircular_tensor(space, p)
    return torch.einsum("lijk,i,j,k->l", C, as_point(X), as_point(Y), as_point(Z))


def c_dot_sigma(sigma, X, Y, U, V, q) -> torch.Tensor:
    """(𝒞(X,Y)·σ)(U,V) = R⊥(X,Y)σ(U,V) - σ(𝒞(X,Y)U, V) - σ(U, 𝒞(X,Y)V)."""
    geo = point_geometry(sigma, q)
    return evaluate(dot_sigma_tensor(geo, geo.amb_concircular), X, Y, U, V)


def c_dot_nabla_sigma(sigma, X, Y, U, V, W, q) -> torch.Tensor:
    geo = point_geometry(sigma, q)
    return evaluate(dot_nabla_sigma_tensor(geo, geo.amb_concircular), X, Y, U, V, W)
