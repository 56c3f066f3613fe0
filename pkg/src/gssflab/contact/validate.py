# -*- coding:utf-8 -*-
from dataclasses import dataclass, field
from typing import Dict, List

import torch
from tqdm import tqdm

from gssflab.errors import DegeneratePlaneError
from gssflab.manifold import covariant_derivative, curvature_bundle
from gssflab.tensor import DOWN, UP
from gssflab.utils import as_point, logger, max_abs

from .structure import ModelSpace, ansatz_tensor, axiom_residuals

__all__ = [
    "GssfResidualReport",
    "validate_gssf",
    "validate_space",
    "phi_sectional_curvature",
    "residual_frame",
]

DEGENERATE_PLANE = 1e-8


@dataclass
class GssfResidualReport:
    space: str
    point: List[float]
    residuals: Dict[str, float]
    tol: float
    printed_form_applies: bool
    scalar: float = 0.0
    ricci_xi_xi: float = 0.0
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.max_residual < self.tol

    @property
    def max_residual(self):
        return max(self.residuals.values()) if self.residuals else 0.0


def residual_frame(space: ModelSpace, p) -> torch.Tensor:
    """Coordinate frame plus ξ and φ∂0, one vector per row."""
    _, phi, xi, _ = space.structure.fields(p)
    eye = torch.eye(space.dim, dtype=xi.dtype)
    return torch.cat([eye, xi[None, :], (phi @ eye[0])[None, :]], dim=0)


def validate_gssf(space: ModelSpace, p, tol: float = 1e-6) -> GssfResidualReport:
    p = as_point(p)
    cs, prm = space.structure, space.params.at(p)
    n, f13 = space.n, prm.f13
    alpha, beta = space.alpha, space.beta
    g, phi, xi, eta = cs.fields(p)
    eye = torch.eye(space.dim, dtype=g.dtype)

    cb = curvature_bundle(cs.metric, p)
    rm = cb.riemann13.entries
    F = residual_frame(space, p)
    diff = torch.einsum("lijk,ai,bj,ck->abcl", rm - ansatz_tensor(prm, cs, p), F, F, F)

    # nphi[a, b, c] = ((∇_c φ) e_b)^a
    nphi = covariant_derivative(cs.phi, (UP, DOWN), cs.metric, p).entries
    gphi_t = phi.T @ g
    want_nphi = alpha * (
        torch.einsum("cb,a->abc", g, xi) - torch.einsum("b,ac->abc", eta, eye)
    ) + beta * (torch.einsum("cb,a->abc", gphi_t, xi) - torch.einsum("b,ac->abc", eta, phi))

    nxi = covariant_derivative(cs.xi, (UP,), cs.metric, p).entries
    want_nxi = -alpha * phi + beta * (eye - torch.outer(xi, eta))

    ricci = cb.ricci.entries
    want_ricci = (2 * n * prm.f1 + 3 * prm.f2 - prm.f3) * g - (
        3 * prm.f2 + (2 * n - 1) * prm.f3
    ) * torch.outer(eta, eta)

    r_xi = torch.einsum("lijk,k->lij", rm, xi)
    want_r_xi = f13 * (torch.einsum("j,li->lij", eta, eye) - torch.einsum("i,lj->lij", eta, eye))

    r_xi_x_xi = torch.einsum("lijk,i,k->lj", rm, xi, xi)
    want_r_xi_x_xi = f13 * (torch.outer(xi, eta) - eye)

    s_xi_xi = float(xi @ ricci @ xi)

    residuals = {
        "curvature": max_abs(diff),
        "nabla_phi": max_abs(nphi - want_nphi),
        "nabla_xi": max_abs(nxi - want_nxi),
        "ricci": max_abs(ricci - want_ricci),
        "r_xy_xi": max_abs(r_xi - want_r_xi),
        "r_xi_x_xi": max_abs(r_xi_x_xi - want_r_xi_x_xi),
        "ricci_xi_xi": abs(s_xi_xi - 2 * n * f13),
        "scalar": abs(cb.scalar - space.expected_scalar()),
        "axioms": max(axiom_residuals(cs, p).values()),
    }
    report = GssfResidualReport(
        space.name,
        p.tolist(),
        residuals,
        tol,
        space.printed_form_applies(),
        scalar=cb.scalar,
        ricci_xi_xi=s_xi_xi,
    )
    logger.debug("validate {0} at {1}: max residual {2:.3e}".format(space.name, p.tolist(), report.max_residual))
    return report


def validate_space(space: ModelSpace, samples=50, seed=42, tol=1e-6, verbose=0) -> List[GssfResidualReport]:
    points = space.metric.sample(samples, seed)
    reports = []
    for p in tqdm(points, disable=verbose != 1, desc=space.name):
        reports.append(validate_gssf(space, p, tol))
    failed = sum(1 for r in reports if not r.passed)
    logger.info("validated {0} at {1} points, {2} failed".format(space.name, len(reports), failed))
    if not space.printed_form_applies():
        logger.warning(
            "{0}: the printed ∇φ/∇ξ identities assume β = 0 and α = f1 − f3; "
            "checked with (α, β) = ({1}, {2}) instead".format(space.name, space.alpha, space.beta)
        )
    return reports


def phi_sectional_curvature(space: ModelSpace, X, p) -> float:
    p = as_point(p)
    X = as_point(X)
    g, phi, xi, eta = space.structure.fields(p)
    norm_x = float(torch.sqrt(X @ g @ X))
    if norm_x == 0.0 or float(torch.sqrt((phi @ X) @ g @ (phi @ X))) < DEGENERATE_PLANE * norm_x:
        raise DegeneratePlaneError("span{X, φX} is degenerate: X is parallel to ξ")
    X = X - (eta @ X) * xi
    X = X / torch.sqrt(X @ g @ X)
    Y = phi @ X
    r04 = curvature_bundle(space.metric, p).riemann04.entries
    num = torch.einsum("ijkw,i,j,k,w->", r04, X, Y, Y, X)
    den = (X @ g @ X) * (Y @ g @ Y) - (X @ g @ Y) ** 2
    return float(num / den)
