# -*- coding:utf-8 -*-
"""Providers of normal-valued symmetric forms σ on a submanifold chart.

Every provider exposes a pure ``values(q)`` returning ``σ[a, b, :]``, the
ambient components of σ(∂a, ∂b), so that ∇̃σ and R⊥ can be differentiated.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import torch
from torch.func import jacfwd

from gssflab.errors import PreconditionError
from gssflab.manifold import christoffel_fn
from gssflab.utils import DTYPE, as_point, logger

from .embedding import EmbeddingModel, normal_candidates, normal_frame_fn, tangent_coords_fn

__all__ = ["SigmaField", "geometric_sigma", "synth_sigma", "GEOMETRIC", "SYNTHETIC"]

GEOMETRIC = "geometric"
SYNTHETIC = "synthetic"
EMBEDDING_CONNECTION = "embedding"
FLAT_CONNECTION = "flat"


@dataclass(frozen=True)
class SigmaField:
    embedding: EmbeddingModel
    values: Callable[[torch.Tensor], torch.Tensor]
    kind: str = GEOMETRIC
    normal_connection: str = EMBEDDING_CONNECTION
    seed: Optional[int] = None
    candidates: Optional[Tuple[int, ...]] = None
    raw: Optional[Callable[[torch.Tensor], torch.Tensor]] = None

    def __post_init__(self):
        if self.normal_connection not in (EMBEDDING_CONNECTION, FLAT_CONNECTION):
            raise ValueError("normal_connection must be 'embedding' or 'flat'")

    def __call__(self, q):
        return self.values(as_point(q))

    def frame_candidates(self, q):
        if self.candidates is not None:
            return self.candidates
        return normal_candidates(self.embedding, q)

    def label(self):
        if self.kind == SYNTHETIC:
            return "synthetic({0})".format(self.seed)
        return GEOMETRIC


def geometric_sigma(e: EmbeddingModel) -> SigmaField:
    """σ(∂a, ∂b) = normal part of ∇̃_∂a (dE ∂b), from the Gauss formula."""
    emb = e.map
    g_fn = e.ambient.metric.components
    gamma = christoffel_fn(g_fn)
    eye = torch.eye(e.dim, dtype=DTYPE)

    def values(q):
        J = jacfwd(emb)(q)
        H = jacfwd(jacfwd(emb))(q)  # H[k, a, b]
        x = emb(q)
        g = g_fn(x)
        acc = H + torch.einsum("kij,ia,jb->kab", gamma(x), J, J)
        PN = eye - J @ torch.linalg.solve(J.T @ g @ J, J.T @ g)
        out = torch.einsum("kl,lab->abk", PN, acc)
        return 0.5 * (out + out.transpose(0, 1))

    return SigmaField(e, values, GEOMETRIC)


def _box_center(e):
    return torch.tensor([0.5 * (lo + hi) for lo, hi in e.sample_box], dtype=DTYPE)


def synth_sigma(seed: int, e: EmbeddingModel, normal_connection: str = EMBEDDING_CONNECTION) -> SigmaField:
    """Seeded σ satisfying σ(X, ξ) = 0 and σ(X, φY) = φσ(X, Y).

    An analytic symmetric normal-valued form is drawn from ``seed``; its
    arguments are projected off ξ and the result is averaged over the
    φ-action so both constraints hold exactly.
    """
    from .checks import check_invariant

    center = _box_center(e)
    if e.codim == 0:
        raise PreconditionError("{0} has no normal directions for a synthetic σ".format(e.name))
    inv = check_invariant(e, center)
    if not inv.invariant:
        raise PreconditionError("synthetic σ needs an invariant embedding; {0} is not".format(e.name))

    cands = normal_candidates(e, center)
    nf = normal_frame_fn(e, cands)
    coords = tangent_coords_fn(e)
    emb = e.map
    cs = e.ambient.structure
    m, k = e.m, e.codim

    gen = torch.Generator().manual_seed(int(seed))
    c0 = torch.randn((m, m, k), generator=gen, dtype=DTYPE)
    c1 = 0.5 * torch.randn((m, m, k, m), generator=gen, dtype=DTYPE)
    c0 = 0.5 * (c0 + c0.transpose(0, 1))
    c1 = 0.5 * (c1 + c1.transpose(0, 1))

    def raw(q):
        coef = c0 + c1 @ q
        return torch.einsum("dk,abk->abd", nf(q), coef)

    def values(q):
        s = raw(q)
        x = emb(q)
        J = jacfwd(emb)(q)
        L = coords(q)
        Phi = cs.phi(x)
        xi_m = L @ cs.xi(x)
        eta_m = J.T @ cs.eta(x)
        phi_m = L @ Phi @ J
        proj = torch.eye(m, dtype=DTYPE) - torch.outer(xi_m, eta_m)
        s0 = torch.einsum("ca,db,cdk->abk", proj, proj, s)
        t2 = torch.einsum("ca,db,cdk->abk", phi_m, phi_m, s0)
        t3 = torch.einsum("ca,cbk->abk", phi_m, s0)
        t4 = torch.einsum("db,adk->abk", phi_m, s0)
        t34 = torch.einsum("kl,abl->abk", Phi, t3 + t4)
        return 0.25 * (s0 - t2 - t34)

    logger.debug("synthetic σ seed={0} on {1}".format(seed, e.name))
    return SigmaField(e, values, SYNTHETIC, normal_connection, int(seed), cands, raw)
