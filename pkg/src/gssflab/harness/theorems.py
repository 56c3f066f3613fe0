# -*- coding:utf-8 -*-
"""Totally-geodesic characterisations of invariant submanifolds.

Each theorem names a Tachibana-type condition on σ. The forward direction
checks that the condition's left side vanishes on a totally geodesic
submanifold. The backward direction reproduces the substitution argument:
inserting ξ into the right slots reduces the condition to a nonzero multiple
of σ, which is compared against its closed form.
"""

from collections import OrderedDict
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import torch
from tqdm import tqdm

from gssflab.contact import ModelSpace
from gssflab.errors import CatalogError, PreconditionError
from gssflab.manifold import curvature_bundle
from gssflab.submanifold import PointGeometry, point_geometry
from gssflab.tachibana import (
    METRIC,
    RICCI,
    SIGMA,
    BilinearInput,
    dot_sigma_tensor,
    evaluate,
    frame_tensor,
    parallelism_tensor,
    q_tensor,
)
from gssflab.utils import logger, max_abs, random_vectors

from .config import HarnessConfig, Scenario
from .report import FAIL, FORWARD, IDENTITY, PASS, Precondition, VerificationReport, combine_verdicts

__all__ = [
    "Theorem",
    "THEOREMS",
    "theorem_ids",
    "preconditions",
    "run_theorem",
    "derivation_identity_check",
    "forward_residual",
]

F13_TOL = 1e-12
SCALAR_TOL = 1e-9
L1_TOL = 1e-12

F13 = "f1 != f3"
SCALAR = "r != 2n(2n+1)(f1-f3)"
L1_NAME = "L1 != f1-f3"


def _ricci(geo):
    S = geo.amb_ricci
    return BilinearInput(0.5 * (S + S.T), RICCI)


def _fix(T, fixed):
    """Contract the given slots of T with vectors, leaving the remaining axes in order."""
    for s in sorted(fixed, reverse=True):
        T = torch.tensordot(T, fixed[s], dims=([s], [0]))
    return T


def _xi_norm(space: ModelSpace):
    # S̃(ξ, ξ) = 2n(f1 - f3)
    return 2 * space.n * space.params.f13


# forward builders return (component array, number of tangent slots)


def _qsigma_r(geo, L1):
    R = geo.riemann.permute(1, 2, 3, 0)
    return q_tensor(BilinearInput(geo.sigma, SIGMA), R, 3), 5


def _qs_sigma(geo, L1):
    return q_tensor(_ricci(geo), geo.sigma, 2), 4


def _qs_nabla_sigma(geo, L1):
    return q_tensor(_ricci(geo), geo.nabla_sigma, 3), 5


def _qg_r_sigma(geo, L1):
    return q_tensor(BilinearInput(geo.G, METRIC), dot_sigma_tensor(geo, geo.riemann), 4), 6


def _qg_c_sigma(geo, L1):
    return q_tensor(BilinearInput(geo.G, METRIC), dot_sigma_tensor(geo, geo.amb_concircular), 4), 6


def _pseudo(geo, L1):
    return parallelism_tensor("pseudo", geo, L1), 4


# identity builders return (lhs, rhs, coefficient, pivot residual or None)


def _id_qsigma_r(geo, space, L1):
    xi = geo.xi
    Q = _fix(_qsigma_r(geo, L1)[0], {2: xi, 4: xi})
    lhs = torch.einsum("xyuky->xuk", Q)
    coef = -(2 * geo.m_n - 1) * space.params.f13
    return lhs, coef * torch.einsum("uxk->xuk", geo.sigma), coef, None


def _id_qs_sigma(geo, space, L1):
    xi = geo.xi
    lhs = _fix(_qs_sigma(geo, L1)[0], {1: xi, 3: xi})
    coef = -_xi_norm(space)
    return lhs, coef * torch.einsum("uxk->xuk", geo.sigma), coef, None


def _id_qs_nabla_sigma(geo, space, L1):
    xi = geo.xi
    lhs = _fix(_qs_nabla_sigma(geo, L1)[0], {1: xi, 2: xi, 4: xi})
    s = 2 * _xi_norm(space)
    sig_phi = torch.einsum("cx,uck->xuk", geo.phi, geo.sigma)
    rhs = s * (-space.alpha * sig_phi + space.beta * torch.einsum("uxk->xuk", geo.sigma))
    coef = s * (space.beta if space.alpha == 0 else -space.alpha)
    return lhs, rhs, coef, None


def _id_qg_r_sigma(geo, space, L1):
    xi = geo.xi
    lhs = _fix(_qg_r_sigma(geo, L1)[0], {1: xi, 2: xi, 3: xi, 5: xi})
    coef = 2 * space.params.f13
    r_x_xi_xi = torch.einsum("cxyz,y,z->cx", geo.riemann, xi, xi)
    pivot = 2 * torch.einsum("cx,ack->xak", r_x_xi_xi, geo.sigma)
    return lhs, coef * torch.einsum("axk->xak", geo.sigma), coef, max_abs(lhs - pivot)


def _id_qg_c_sigma(geo, space, L1):
    xi = geo.xi
    n = space.n
    lhs = _fix(_qg_c_sigma(geo, L1)[0], {1: xi, 2: xi, 3: xi, 4: xi})
    coef = -2 * (space.params.f13 - space.expected_scalar() / (2 * n * (2 * n + 1)))
    c_x_xi_xi = torch.einsum("cxyz,y,z->cx", geo.amb_concircular, xi, xi)
    pivot = -2 * torch.einsum("cx,bck->xbk", c_x_xi_xi, geo.sigma)
    return lhs, coef * geo.sigma, coef, max_abs(lhs - pivot)


def _id_pseudo(geo, space, L1):
    xi = geo.xi
    lhs = _fix(_pseudo(geo, L1)[0], {0: xi, 3: xi})
    coef = space.params.f13 - L1
    return lhs, coef * torch.einsum("uyk->yuk", geo.sigma), coef, None


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    condition: str
    requires: Tuple[str, ...]
    forward: Callable[[PointGeometry, Optional[float]], Tuple[torch.Tensor, int]]
    identity: Callable
    substitution: str


THEOREMS = OrderedDict(
    (t.theorem_id, t)
    for t in [
        Theorem("T-QsigmaR", "Q(σ,R) = 0", (F13,), _qsigma_r, _id_qsigma_r,
                "trace_Y Q(σ,R)(X,Y,ξ;U,ξ) = -(2m-1)(f1-f3) σ(U,X)"),
        Theorem("T-QSsigma", "Q(S,σ) = 0", (F13,), _qs_sigma, _id_qs_sigma,
                "Q(S,σ)(X,ξ;U,ξ) = -S(ξ,ξ) σ(U,X)"),
        Theorem("T-QSnablasigma", "Q(S,∇̃σ) = 0", (F13,), _qs_nabla_sigma, _id_qs_nabla_sigma,
                "Q(S,∇̃_Xσ)(ξ,ξ;U,ξ) = 2S(ξ,ξ)[-α σ(U,φX) + β σ(U,X)]"),
        Theorem("T-QgRsigma", "Q(g,R̃·σ) = 0", (F13,), _qg_r_sigma, _id_qg_r_sigma,
                "Q(g,R(X,ξ)·σ)(ξ,ξ;U,ξ) = 2(f1-f3) σ(U,X)"),
        Theorem("T-QgCsigma", "Q(g,𝒞·σ) = 0", (SCALAR,), _qg_c_sigma, _id_qg_c_sigma,
                "Q(g,𝒞(X,ξ)·σ)(ξ,ξ;ξ,V) = -2[(f1-f3) - r/(2n(2n+1))] σ(X,V)"),
        Theorem("T-pseudo", "R̃·σ = L1 Q(g,σ)", (F13, L1_NAME), _pseudo, _id_pseudo,
                "(R(ξ,Y)·σ)(U,ξ) - L1 Q(g,σ)(U,ξ;ξ,Y) = [(f1-f3) - L1] σ(U,Y)"),
    ]
)


def theorem_ids():
    return list(THEOREMS)


def preconditions(space: ModelSpace, requires, L1=None, point=None) -> list:
    """Evaluate the named preconditions; the scalar curvature is measured numerically."""
    f13 = space.params.f13
    out = []
    for name in requires:
        if name == F13:
            out.append(Precondition(F13, f13, abs(f13) > F13_TOL))
        elif name == SCALAR:
            p = point if point is not None else space.metric.sample(1, 0)[0]
            gap = curvature_bundle(space.metric, p).scalar - space.concircular_threshold()
            out.append(Precondition(SCALAR, gap, abs(gap) >= SCALAR_TOL))
        elif name == L1_NAME:
            gap = L1 - f13
            out.append(Precondition(L1_NAME, gap, abs(gap) >= L1_TOL))
    for pre in out:
        if not pre.satisfied:
            logger.warning("{0}: precondition {1} fails ({2:.3e})".format(space.name, pre.name, pre.value))
    return out


def _resolve(theorem_id, scenario, config):
    if theorem_id not in THEOREMS:
        raise CatalogError("theorem", theorem_id, THEOREMS)
    theorem = THEOREMS[theorem_id]
    if L1_NAME in theorem.requires and scenario.L1 is None:
        raise PreconditionError("{0} needs L1".format(theorem_id))
    sigma = scenario.resolve(config)
    e = sigma.embedding
    points = e.sample(scenario.samples, scenario.seed)
    pres = preconditions(e.ambient, theorem.requires, scenario.L1, e(points[0]))
    return theorem, sigma, points, pres


def forward_residual(T, k, frame, tuples=()) -> Tuple[float, float]:
    """Max residual over frame tuples containing the last frame vector, and over ``tuples``."""
    m = frame.shape[0] - 1
    F = frame_tensor(T, frame, k).clone()
    F[(slice(0, m),) * k] = 0.0
    rand = max((max_abs(evaluate(T, *vs)) for vs in tuples), default=0.0)
    return max_abs(F), rand


def run_theorem(theorem_id, scenario: Scenario, mode=FORWARD, config: Optional[HarnessConfig] = None, verbose=0):
    """Forward check of one theorem, or its identity chain when ``mode`` is backward."""
    if mode != FORWARD:
        return derivation_identity_check(theorem_id, scenario, config, verbose)
    config = config or HarnessConfig()
    theorem, sigma, points, pres = _resolve(theorem_id, scenario, config)
    logger.info("{0} forward on {1} with σ={2}".format(theorem_id, sigma.embedding.name, sigma.label()))
    worst_xi, worst_rand, diagnostics = 0.0, 0.0, []
    for i, q in enumerate(tqdm(points, disable=verbose != 1, desc=theorem_id)):
        geo = point_geometry(sigma, q)
        T, k = theorem.forward(geo, scenario.L1)
        frame = torch.cat([torch.eye(geo.m, dtype=T.dtype), geo.xi[None, :]], dim=0)
        vecs = random_vectors(geo.m, config.random_tuples * k, scenario.seed + 1 + i)
        tuples = vecs.reshape(config.random_tuples, k, geo.m) if config.random_tuples else ()
        r_xi, r_rand = forward_residual(T, k, frame, tuples)
        worst_xi, worst_rand = max(worst_xi, r_xi), max(worst_rand, r_rand)
        diagnostics.append({"point": q.tolist(), "residual": max(r_xi, r_rand)})
    residual = max(worst_xi, worst_rand)
    report = VerificationReport(
        theorem_id,
        FORWARD,
        scenario.as_dict(),
        pres,
        [
            {"name": "xi-tuples", "residual": worst_xi, "passed": worst_xi < scenario.tol},
            {"name": "random-tuples", "residual": worst_rand, "passed": worst_rand < scenario.tol},
        ],
        residual,
        combine_verdicts(residual, scenario.tol, pres),
        diagnostics,
        [theorem.condition],
    )
    logger.info("{0} forward: {1} (max residual {2:.3e})".format(theorem_id, report.verdict, residual))
    return report


def derivation_identity_check(theorem_id, scenario: Scenario, config: Optional[HarnessConfig] = None, verbose=0):
    """Reproduce the ξ-substitution chain and compare with the closed-form coefficient times σ."""
    config = config or HarnessConfig()
    theorem, sigma, points, pres = _resolve(theorem_id, scenario, config)
    space = sigma.embedding.ambient
    logger.info("{0} identity chain on {1} with σ={2}".format(theorem_id, sigma.embedding.name, sigma.label()))
    worst, worst_pivot, lhs_norm, coef, diagnostics = 0.0, 0.0, 0.0, 0.0, []
    has_pivot = False
    for q in tqdm(points, disable=verbose != 1, desc=theorem_id):
        geo = point_geometry(sigma, q)
        lhs, rhs, coef, pivot = theorem.identity(geo, space, scenario.L1)
        r = max_abs(lhs - rhs)
        worst, lhs_norm = max(worst, r), max(lhs_norm, max_abs(lhs))
        if pivot is not None:
            has_pivot = True
            worst_pivot = max(worst_pivot, pivot)
        diagnostics.append({"point": q.tolist(), "residual": r, "lhs_norm": max_abs(lhs)})
    nonzero = abs(coef) > F13_TOL
    results = [
        {"name": "identity", "residual": worst, "passed": worst < scenario.tol},
        {"name": "coefficient", "value": float(coef), "nonzero": nonzero, "passed": nonzero},
        {"name": "lhs-norm", "value": lhs_norm},
    ]
    if has_pivot:
        results.append({"name": "pivot", "residual": worst_pivot, "passed": worst_pivot < scenario.tol})
    residual = max(worst, worst_pivot)
    verdict = combine_verdicts(residual, scenario.tol, pres)
    if verdict == PASS and not nonzero:
        # a vanishing coefficient does not force σ = 0
        logger.warning("{0}: identity coefficient vanishes on {1}".format(theorem_id, space.name))
        verdict = FAIL
    report = VerificationReport(
        theorem_id,
        IDENTITY,
        scenario.as_dict(),
        pres,
        results,
        residual,
        verdict,
        diagnostics,
        [theorem.substitution],
    )
    logger.info("{0} identity: {1} (max residual {2:.3e})".format(theorem_id, report.verdict, residual))
    return report
