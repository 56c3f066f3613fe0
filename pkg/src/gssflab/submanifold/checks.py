# -*- coding:utf-8 -*-
"""Invariance, Lemma-type identities and totally-geodesic checks on embedded submanifolds."""

from dataclasses import dataclass, field
from typing import Union

import torch
from torch.func import jacfwd

from gssflab.contact import ContactStructure, ModelSpace
from gssflab.errors import PreconditionError
from gssflab.manifold import covariant_derivative, curvature_bundle
from gssflab.tensor import DOWN, UP
from gssflab.utils import as_point, logger, max_abs

from .embedding import EmbeddingModel, tangent_coords_fn
from .sigma import SigmaField

__all__ = [
    "InvarianceReport",
    "Lemma31Report",
    "check_invariant",
    "induced_structure",
    "induced_space",
    "lemma31_check",
    "is_totally_geodesic",
]

INVARIANCE_TOL = 1e-8


@dataclass(frozen=True)
class InvarianceReport:
    invariant: bool
    xi_normal: float
    phi_normal: float

    def __bool__(self):
        return self.invariant


def check_invariant(e: EmbeddingModel, q) -> InvarianceReport:
    """ξ tangent and φ(TM) ⊆ TM at ``q``, measured by g-norms of normal parts."""
    q = as_point(q)
    J = e.check(q)
    x = e(q)
    g, phi, xi, _ = e.ambient.structure.fields(x)
    L = tangent_coords_fn(e)(q)
    PN = torch.eye(e.dim, dtype=J.dtype) - J @ L

    def gnorm(v):
        return float(torch.sqrt(torch.clamp(v @ g @ v, min=0.0)))

    xi_n = gnorm(PN @ xi)
    phi_n = max((gnorm(PN @ phi @ J[:, a]) for a in range(e.m)), default=0.0)
    return InvarianceReport(xi_n < INVARIANCE_TOL and phi_n < INVARIANCE_TOL, xi_n, phi_n)


def induced_structure(e: EmbeddingModel, q=None) -> ContactStructure:
    """Restriction of (φ, ξ, η, g) to an invariant submanifold, in its own coordinates."""
    if e.m % 2 == 0:
        raise PreconditionError("{0} has even dimension {1}; no induced contact structure".format(e.name, e.m))
    center = q if q is not None else [0.5 * (lo + hi) for lo, hi in e.sample_box]
    if not check_invariant(e, center).invariant:
        raise PreconditionError("{0} is not invariant".format(e.name))
    cs = e.ambient.structure
    emb = e.map
    coords = tangent_coords_fn(e)

    def phi(p):
        return coords(p) @ cs.phi(emb(p)) @ jacfwd(emb)(p)

    def xi(p):
        return coords(p) @ cs.xi(emb(p))

    def eta(p):
        return jacfwd(emb)(p).T @ cs.eta(emb(p))

    return ContactStructure(e.induced_model(), phi, xi, eta, (e.m - 1) // 2)


def induced_space(e: EmbeddingModel) -> ModelSpace:
    """The submanifold as a candidate generalized Sasakian-space-form with the ambient coefficients."""
    amb = e.ambient
    return ModelSpace(induced_structure(e), amb.params, "{0}:induced".format(e.name), amb.alpha, amb.beta)


@dataclass(frozen=True)
class Lemma31Report:
    point: list
    residuals: dict
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", all(v < self.tol for v in self.residuals.values()))

    @property
    def max_residual(self):
        return max(self.residuals.values())


def lemma31_check(source: Union[EmbeddingModel, SigmaField], q, tol: float = 1e-6) -> Lemma31Report:
    """The six identities every invariant submanifold of a GSSF satisfies.

    The ∇φ, ∇ξ, R(ξ,X)ξ and S(X,ξ) identities use the Levi-Civita connection
    of the induced metric; the σ identities use the supplied provider.
    """
    from .geometry import point_geometry

    e = source.embedding if isinstance(source, SigmaField) else source
    q = as_point(q)
    if not check_invariant(e, q).invariant:
        raise PreconditionError("{0} is not invariant at {1}".format(e.name, q.tolist()))

    amb = e.ambient
    f13 = amb.params.at(e(q)).f13
    alpha, beta = amb.alpha, amb.beta
    cs = induced_structure(e, q)
    G, phi, xi, eta = cs.fields(q)
    eye = torch.eye(e.m, dtype=G.dtype)
    mn = cs.n

    nphi = covariant_derivative(cs.phi, (UP, DOWN), cs.metric, q).entries
    want_nphi = alpha * (
        torch.einsum("cb,a->abc", G, xi) - torch.einsum("b,ac->abc", eta, eye)
    ) + beta * (torch.einsum("cb,a->abc", phi.T @ G, xi) - torch.einsum("b,ac->abc", eta, phi))
    nxi = covariant_derivative(cs.xi, (UP,), cs.metric, q).entries
    want_nxi = -alpha * phi + beta * (eye - torch.outer(xi, eta))

    cb = curvature_bundle(cs.metric, q)
    r_xi_x_xi = torch.einsum("lijk,i,k->lj", cb.riemann13.entries, xi, xi)
    s_x_xi = cb.ricci.entries @ xi

    geo = point_geometry(source, q)
    sig = geo.sigma
    sigma_phi = torch.einsum("db,adk->abk", phi, sig) - torch.einsum("kl,abl->abk", geo.phi_amb, sig)
    sigma_xi = torch.einsum("b,abk->ak", xi, sig)

    residuals = {
        "nabla_phi": max_abs(nphi - want_nphi),
        "nabla_xi": max_abs(nxi - want_nxi),
        "r_xi_x_xi": max_abs(r_xi_x_xi - f13 * (torch.outer(xi, eta) - eye)),
        "ricci_x_xi": max_abs(s_x_xi - 2 * mn * f13 * eta),
        "sigma_phi": max_abs(sigma_phi),
        "sigma_xi": max_abs(sigma_xi),
    }
    return Lemma31Report(q.tolist(), residuals, tol)


def is_totally_geodesic(e: EmbeddingModel, samples: int = 50, tol: float = 1e-8, seed: int = 42) -> bool:
    from .geometry import second_fundamental_form

    worst = 0.0
    for q in e.sample(samples, seed):
        worst = max(worst, max_abs(second_fundamental_form(e, q)))
    logger.debug("{0}: max |σ| = {1:.3e} over {2} points".format(e.name, worst, samples))
    return worst < tol
