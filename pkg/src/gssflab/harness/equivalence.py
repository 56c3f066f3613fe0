# -*- coding:utf-8 -*-
from typing import Optional

import torch
from tqdm import tqdm

from gssflab.errors import PreconditionError
from gssflab.submanifold import GEOMETRIC, point_geometry
from gssflab.tachibana import frame_tensor, parallelism_tensor
from gssflab.utils import logger, max_abs

from .config import HarnessConfig, Scenario
from .report import FAIL, INCONCLUSIVE, PASS, VerificationReport
from .theorems import F13, L1_NAME, SCALAR, THEOREMS, preconditions

__all__ = ["EQUIVALENCE_ROWS", "equivalence_matrix"]


def _kind(kind, slots):
    return lambda geo, L1: (parallelism_tensor(kind, geo, L1), slots)


# (row name, builder returning (array, tangent slots), preconditions)
EQUIVALENCE_ROWS = [
    ("totally-geodesic", lambda geo, L1: (geo.sigma, 2), ()),
    ("parallel", _kind("parallel", 3), (F13,)),
    ("semi-parallel", _kind("semi", 4), (F13,)),
    ("2-semi-parallel", _kind("2-semi", 5), (F13,)),
    ("pseudo-parallel", _kind("pseudo", 4), (F13, L1_NAME)),
    ("concircularly-semi-parallel", _kind("concircular-semi", 4), (SCALAR,)),
    ("concircularly-2-semi-parallel", _kind("concircular-2-semi", 5), (SCALAR,)),
] + [(t.condition, t.forward, t.requires) for t in THEOREMS.values()]


def equivalence_matrix(scenario: Scenario, config: Optional[HarnessConfig] = None, verbose=0) -> VerificationReport:
    """Evaluate every listed condition on one invariant submanifold and check they agree.

    A row holds when its residual over all frame tuples is below the
    scenario tolerance. Rows whose preconditions fail are reported as
    inconclusive and left out of the agreement check.
    """
    if scenario.sigma_mode != GEOMETRIC:
        raise PreconditionError("the equivalence matrix runs on the geometric second fundamental form")
    config = config or HarnessConfig()
    L1 = 0.0 if scenario.L1 is None else scenario.L1
    sigma = scenario.resolve(config)
    e = sigma.embedding
    points = e.sample(scenario.samples, scenario.seed)
    residuals = [0.0] * len(EQUIVALENCE_ROWS)
    for q in tqdm(points, disable=verbose != 1, desc="equivalence"):
        geo = point_geometry(sigma, q)
        frame = torch.cat([torch.eye(geo.m, dtype=geo.sigma.dtype), geo.xi[None, :]], dim=0)
        for i, (_, build, _) in enumerate(EQUIVALENCE_ROWS):
            T, k = build(geo, L1)
            residuals[i] = max(residuals[i], max_abs(frame_tensor(T, frame, k)))

    all_pres, rows = {}, []
    point = e(points[0])
    for (name, _, requires), residual in zip(EQUIVALENCE_ROWS, residuals):
        pres = preconditions(e.ambient, requires, L1, point)
        for p in pres:
            all_pres[p.name] = p
        holds = residual < scenario.tol
        if not all(p.satisfied for p in pres):
            verdict = INCONCLUSIVE
        else:
            verdict = PASS if holds else FAIL
        rows.append({"name": name, "residual": residual, "holds": holds, "verdict": verdict})

    decided = {r["holds"] for r in rows if r["verdict"] != INCONCLUSIVE}
    if len(decided) > 1:
        overall = FAIL
    elif any(r["verdict"] == INCONCLUSIVE for r in rows):
        overall = INCONCLUSIVE
    else:
        overall = PASS
    notes = [] if len(decided) <= 1 else ["conditions disagree on {0}".format(e.name)]
    report = VerificationReport(
        "equivalence",
        "matrix",
        scenario.as_dict(),
        [all_pres[k] for k in sorted(all_pres)],
        rows,
        max(residuals),
        overall,
        notes=notes,
    )
    logger.info("equivalence on {0}: {1}".format(e.name, overall))
    return report
