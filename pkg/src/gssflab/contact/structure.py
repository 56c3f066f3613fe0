# -*- coding:utf-8 -*-
from dataclasses import dataclass
from typing import Callable

import torch

from gssflab.manifold import MetricModel
from gssflab.utils import as_point, max_abs

__all__ = [
    "ContactStructure",
    "GssfParams",
    "ModelSpace",
    "sasakian_params",
    "axiom_residuals",
    "gssf_ansatz",
    "ansatz_tensor",
]


@dataclass(frozen=True)
class ContactStructure:
    """Almost contact metric structure (φ, ξ, η, g) on a chart of dimension 2n+1.

    ``phi(p)[a, b]`` is the a-th component of φ∂b, so ``phi(p) @ X`` is φX.
    ``eta(p)`` returns the covector components η_i.
    """

    metric: MetricModel
    phi: Callable[[torch.Tensor], torch.Tensor]
    xi: Callable[[torch.Tensor], torch.Tensor]
    eta: Callable[[torch.Tensor], torch.Tensor]
    n: int

    def __post_init__(self):
        if self.metric.dim != 2 * self.n + 1:
            raise ValueError(
                "metric dimension {0} is not 2n+1 for n={1}".format(self.metric.dim, self.n)
            )

    @property
    def dim(self):
        return self.metric.dim

    def fields(self, p):
        p = as_point(p)
        return self.metric(p), self.phi(p), self.xi(p), self.eta(p)


@dataclass(frozen=True)
class GssfParams:
    f1: float
    f2: float
    f3: float

    def at(self, p) -> "GssfParams":
        # constant per model; variable coefficients would override this
        return self

    @property
    def f13(self):
        return self.f1 - self.f3

    def as_tuple(self):
        return (self.f1, self.f2, self.f3)


def sasakian_params(c: float) -> GssfParams:
    """Coefficients of a Sasakian-space-form with φ-sectional curvature ``c``."""
    return GssfParams((c + 3.0) / 4.0, (c - 1.0) / 4.0, (c - 1.0) / 4.0)


@dataclass(frozen=True)
class ModelSpace:
    """A generalized Sasakian-space-form realised on one chart.

    ``alpha`` and ``beta`` are the structure constants of ∇ξ = −αφX + β(X − η(X)ξ).
    """

    structure: ContactStructure
    params: GssfParams
    name: str
    alpha: float = 0.0
    beta: float = 0.0

    @property
    def metric(self):
        return self.structure.metric

    @property
    def dim(self):
        return self.structure.dim

    @property
    def n(self):
        return self.structure.n

    @property
    def sample_box(self):
        return self.structure.metric.sample_box

    def expected_scalar(self):
        n, (f1, f2, f3) = self.n, self.params.as_tuple()
        return 2 * n * ((2 * n + 1) * f1 + 3 * f2 - 2 * f3)

    def concircular_threshold(self):
        n = self.n
        return 2 * n * (2 * n + 1) * self.params.f13

    def printed_form_applies(self):
        return self.beta == 0.0 and abs(self.alpha - self.params.f13) < 1e-12


def axiom_residuals(cs: ContactStructure, p) -> dict:
    g, phi, xi, eta = cs.fields(p)
    eye = torch.eye(cs.dim, dtype=g.dtype)
    return {
        "eta_xi": abs(float(eta @ xi) - 1.0),
        "phi_squared": max_abs(phi @ phi + eye - torch.outer(xi, eta)),
        "phi_xi": max_abs(phi @ xi),
        "eta_phi": max_abs(eta @ phi),
        "metric_compat": max_abs(phi.T @ g @ phi - g + torch.outer(eta, eta)),
        "eta_metric": max_abs(eta - g @ xi),
    }


def ansatz_tensor(params: GssfParams, cs: ContactStructure, p) -> torch.Tensor:
    """The curvature ansatz as an array laid out like ``riemann13``."""
    p = as_point(p)
    f1, f2, f3 = params.at(p).as_tuple()
    g, phi, xi, eta = cs.fields(p)
    d = torch.eye(cs.dim, dtype=g.dtype)
    gp = g @ phi  # gp[i, k] = g(e_i, φe_k)
    block1 = torch.einsum("jk,li->lijk", g, d) - torch.einsum("ik,lj->lijk", g, d)
    block2 = (
        torch.einsum("ik,lj->lijk", gp, phi)
        - torch.einsum("jk,li->lijk", gp, phi)
        + 2.0 * torch.einsum("ij,lk->lijk", gp, phi)
    )
    block3 = (
        torch.einsum("i,k,lj->lijk", eta, eta, d)
        - torch.einsum("j,k,li->lijk", eta, eta, d)
        + torch.einsum("ik,j,l->lijk", g, eta, xi)
        - torch.einsum("jk,i,l->lijk", g, eta, xi)
    )
    return f1 * block1 + f2 * block2 + f3 * block3


def gssf_ansatz(params: GssfParams, cs: ContactStructure, X, Y, Z, p) -> torch.Tensor:
    """Right-hand side of the generalized Sasakian-space-form curvature identity."""
    p = as_point(p)
    X, Y, Z = as_point(X), as_point(Y), as_point(Z)
    f1, f2, f3 = params.at(p).as_tuple()
    g, phi, xi, eta = cs.fields(p)

    def gg(a, b):
        return a @ g @ b

    pX, pY, pZ = phi @ X, phi @ Y, phi @ Z
    eX, eY, eZ = eta @ X, eta @ Y, eta @ Z
    return (
        f1 * (gg(Y, Z) * X - gg(X, Z) * Y)
        + f2 * (gg(X, pZ) * pY - gg(Y, pZ) * pX + 2.0 * gg(X, pY) * pZ)
        + f3 * (eX * eZ * Y - eY * eZ * X + gg(X, Z) * eY * xi - gg(Y, Z) * eX * xi)
    )
