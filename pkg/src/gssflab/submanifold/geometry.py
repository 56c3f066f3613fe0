# -*- coding:utf-8 -*-
"""Pointwise submanifold geometry: σ, ∇̃σ, R⊥ and curvatures in submanifold coordinates."""

from dataclasses import dataclass
from typing import Callable, Union

import torch
from torch.func import jacfwd

from gssflab.errors import InvalidNormalError
from gssflab.manifold import christoffel_fn, curvature_bundle, riemann_fn
from gssflab.utils import DTYPE, as_point, max_abs

from .embedding import EmbeddingModel, normal_frame_fn, tangent_coords_fn
from .sigma import EMBEDDING_CONNECTION, SigmaField, geometric_sigma

__all__ = [
    "PointGeometry",
    "point_geometry",
    "second_fundamental_form",
    "gauss_split",
    "shape_operator",
    "weingarten_operator",
    "shape_operator_compatibility",
    "nabla_sigma",
    "as_sigma",
]

NORMAL_TOL = 1e-8


def as_sigma(source: Union[EmbeddingModel, SigmaField]) -> SigmaField:
    if isinstance(source, SigmaField):
        return source
    return geometric_sigma(source)


@dataclass(frozen=True)
class PointGeometry:
    """Everything the Tachibana operators need at one submanifold point.

    Tangent vectors are submanifold coordinate vectors of length m; normal
    values are ambient vectors of length d.
    """

    q: torch.Tensor
    x: torch.Tensor
    J: torch.Tensor
    G: torch.Tensor
    L: torch.Tensor
    PN: torch.Tensor
    normals: torch.Tensor
    g_amb: torch.Tensor
    phi_amb: torch.Tensor
    sigma: torch.Tensor  # [a, b, k]
    nabla_sigma: torch.Tensor  # [a, b, c, k] = (∇̃_∂a σ)(∂b, ∂c)
    rperp: torch.Tensor  # [a, b, k, l] matrix of R⊥(∂a, ∂b) on normal vectors
    riemann: torch.Tensor  # intrinsic, riemann13 layout
    gamma: torch.Tensor
    amb_riemann: torch.Tensor  # ambient R̃ on tangent arguments, tangential part
    amb_concircular: torch.Tensor
    amb_ricci: torch.Tensor
    amb_scalar: float
    xi: torch.Tensor
    eta: torch.Tensor
    phi: torch.Tensor
    curvature_normal_leak: float
    n: int
    m_n: int

    @property
    def m(self):
        return self.G.shape[0]

    def gm(self, X, Y):
        return X @ self.G @ Y

    def sig(self, X, Y):
        return torch.einsum("abk,a,b->k", self.sigma, X, Y)

    def nsig(self, X, Y, Z):
        return torch.einsum("abck,a,b,c->k", self.nabla_sigma, X, Y, Z)

    def rperp_apply(self, X, Y, v):
        return torch.einsum("abkl,a,b,l->k", self.rperp, X, Y, v)

    def R(self, X, Y, Z):
        return torch.einsum("lijk,i,j,k->l", self.riemann, X, Y, Z)

    def ambR(self, X, Y, Z):
        return torch.einsum("lijk,i,j,k->l", self.amb_riemann, X, Y, Z)

    def ambC(self, X, Y, Z):
        return torch.einsum("lijk,i,j,k->l", self.amb_concircular, X, Y, Z)

    def S(self, X, Y):
        return X @ self.amb_ricci @ Y

    def phi_normal(self, v):
        return self.phi_amb @ v

    def sigma_norm(self):
        return max_abs(self.sigma)


def _restrict(L, T, J):
    return torch.einsum("lL,LIJK,Ii,Jj,Kk->lijk", L, T, J, J, J)


def point_geometry(source: Union[EmbeddingModel, SigmaField], q) -> PointGeometry:
    sigma = as_sigma(source)
    e = sigma.embedding
    q = as_point(q)
    J = e.check(q)
    x = e(q)
    amb = e.ambient
    cs = amb.structure
    g, phi, xi, eta = cs.fields(x)
    d, m = e.dim, e.m
    eye_d = torch.eye(d, dtype=DTYPE)

    induced = e.induced_fn()
    G = induced(q)
    L = tangent_coords_fn(e)(q)
    PN = eye_d - J @ L
    cands = sigma.frame_candidates(q)
    nf = normal_frame_fn(e, cands)
    N = nf(q)

    gamma_amb = christoffel_fn(amb.metric.components)
    gamma_m = christoffel_fn(induced)(q)
    sig_fn = sigma.values
    sig = sig_fn(q)
    emb = e.map
    g_fn = amb.metric.components

    if sigma.normal_connection == EMBEDDING_CONNECTION:
        dS = jacfwd(sig_fn)(q)  # [b, c, k, a]
        raw = torch.einsum("bcka->abck", dS) + torch.einsum(
            "kij,ia,bcj->abck", gamma_amb(x), J, sig
        )
        ns = torch.einsum("kl,abcl->abck", PN, raw)
    else:

        def coeffs(p):
            return torch.einsum("ka,kl,bcl->bca", nf(p), g_fn(emb(p)), sig_fn(p))

        ns = torch.einsum("kh,bcha->abck", N, jacfwd(coeffs)(q))
    ns = ns - torch.einsum("dab,dck->abck", gamma_m, sig) - torch.einsum("dac,bdk->abck", gamma_m, sig)

    if e.codim > 0 and sigma.normal_connection == EMBEDDING_CONNECTION:

        def omega(p):
            Np = nf(p)
            dN = jacfwd(nf)(p)  # [k, alpha, a]
            Jp = jacfwd(emb)(p)
            xp = emb(p)
            w = dN + torch.einsum("kij,ia,jh->kha", gamma_amb(xp), Jp, Np)
            return torch.einsum("kb,kl,lha->abh", Np, g_fn(xp), w)

        om = omega(q)
        dom = jacfwd(omega)(q)  # [a, gamma, alpha, b]
        rp = (
            torch.einsum("bgha->abgh", dom)
            - torch.einsum("aghb->abgh", dom)
            + torch.einsum("agt,bth->abgh", om, om)
            - torch.einsum("bgt,ath->abgh", om, om)
        )
        rperp = torch.einsum("kg,abgh,lh,lm->abkm", N, rp, N, g)
    else:
        rperp = torch.zeros((m, m, d, d), dtype=DTYPE)

    cb = curvature_bundle(amb.metric, x)
    rt = cb.riemann13.entries
    ct = cb.concircular()
    leak = max_abs(_restrict(PN, rt, J))

    return PointGeometry(
        q=q,
        x=x,
        J=J,
        G=G,
        L=L,
        PN=PN,
        normals=N,
        g_amb=g,
        phi_amb=phi,
        sigma=sig,
        nabla_sigma=ns,
        rperp=rperp,
        riemann=riemann_fn(induced)(q),
        gamma=gamma_m,
        amb_riemann=_restrict(L, rt, J),
        amb_concircular=_restrict(L, ct, J),
        amb_ricci=J.T @ cb.ricci.entries @ J,
        amb_scalar=cb.scalar,
        xi=L @ xi,
        eta=J.T @ eta,
        phi=L @ phi @ J,
        curvature_normal_leak=leak,
        n=amb.n,
        m_n=(m - 1) // 2,
    )


def second_fundamental_form(e: EmbeddingModel, q) -> torch.Tensor:
    """σ(∂a, ∂b) as ambient vectors, shape ``(m, m, d)``."""
    q = as_point(q)
    e.check(q)
    return geometric_sigma(e)(q)


def gauss_split(e: EmbeddingModel, q) -> dict:
    """Split ∇̃_∂a(dE ∂b) into tangential and normal parts and compare."""
    q = as_point(q)
    J = e.check(q)
    x = e(q)
    g_fn = e.ambient.metric.components
    H = jacfwd(jacfwd(e.map))(q)
    acc = H + torch.einsum("kij,ia,jb->kab", christoffel_fn(g_fn)(x), J, J)
    L = tangent_coords_fn(e)(q)
    tang = torch.einsum("ck,kab->cab", L, acc)
    sig = second_fundamental_form(e, q)
    gamma_m = christoffel_fn(e.induced_fn())(q)
    recombined = torch.einsum("kc,cab->kab", J, tang) + torch.einsum("abk->kab", sig)
    return {
        "connection": max_abs(tang - gamma_m),
        "recombination": max_abs(recombined - acc),
        "symmetry": max_abs(sig - sig.transpose(0, 1)),
        "normality": max_abs(torch.einsum("abk,kl,lc->abc", sig, e.ambient.metric(x), J)),
    }


def shape_operator(e: EmbeddingModel, N, q) -> torch.Tensor:
    """Matrix A with ``A[:, a]`` the coordinates of A_N ∂a, from g(σ(X,Y),N) = g(A_N X, Y)."""
    q = as_point(q)
    N = as_point(N)
    J = e.check(q)
    g = e.ambient.metric(e(q))
    L = tangent_coords_fn(e)(q)
    tang = J @ (L @ N)
    if float(torch.sqrt(torch.clamp(tang @ g @ tang, min=0.0))) > NORMAL_TOL:
        raise InvalidNormalError("vector has a tangential component at {0}".format(q.tolist()))
    sig = second_fundamental_form(e, q)
    B = torch.einsum("abk,kl,l->ab", sig, g, N)
    G = J.T @ g @ J
    return torch.linalg.solve(G, B)


def weingarten_operator(e: EmbeddingModel, normal_field: Callable, q) -> torch.Tensor:
    """A_N from the Weingarten formula: minus the tangential part of ∇̃N."""
    q = as_point(q)
    J = e.check(q)
    x = e(q)
    gamma = christoffel_fn(e.ambient.metric.components)(x)
    dN = jacfwd(normal_field)(q)  # [k, a]
    nab = dN + torch.einsum("kij,ia,j->ka", gamma, J, normal_field(q))
    return -tangent_coords_fn(e)(q) @ nab


def shape_operator_compatibility(e: EmbeddingModel, q) -> float:
    from .embedding import normal_candidates

    q = as_point(q)
    nf = normal_frame_fn(e, normal_candidates(e, q))
    N = nf(q)
    worst = 0.0
    for alpha in range(N.shape[1]):
        field = lambda p, a=alpha: nf(p)[:, a]  # noqa: E731
        worst = max(worst, max_abs(shape_operator(e, N[:, alpha], q) - weingarten_operator(e, field, q)))
    return worst


def nabla_sigma(source, X, Y, Z, q) -> torch.Tensor:
    """(∇̃_X σ)(Y, Z) as an ambient normal vector."""
    geo = point_geometry(source, q)
    return geo.nsig(as_point(X), as_point(Y), as_point(Z))
