# -*- coding:utf-8 -*-
"""Built-in generalized Sasakian-space-forms, each on a single global chart."""

from collections import OrderedDict

import torch

from gssflab.errors import CatalogError
from gssflab.manifold import MetricModel
from gssflab.utils import DTYPE, logger

from .structure import ContactStructure, GssfParams, ModelSpace, sasakian_params

__all__ = ["builtin_space", "space_names", "SPACE_BUILDERS"]


def _complex_phi(n, offset, dim):
    # φ∂x_i = ∂y_i, φ∂y_i = −∂x_i on the block starting at ``offset``
    phi = torch.zeros((dim, dim), dtype=DTYPE)
    for i in range(n):
        x, y = offset + 2 * i, offset + 2 * i + 1
        phi[y, x] = 1.0
        phi[x, y] = -1.0
    return phi


def cosymplectic_flat(n=1, box=None):
    """Flat ℝ^{2n+1} = ℂ^n × ℝ, coordinates (x1, y1, ..., z)."""
    dim = 2 * n + 1
    eye = torch.eye(dim, dtype=DTYPE)
    phi0 = _complex_phi(n, 0, dim)
    e_z = eye[dim - 1]

    metric = MetricModel(dim, lambda p: torch.eye(dim, dtype=DTYPE) + 0.0 * p.sum(), box or (), "flat")
    cs = ContactStructure(metric, lambda p: phi0 + 0.0 * p.sum(), lambda p: e_z + 0.0 * p.sum(),
                          lambda p: e_z + 0.0 * p.sum(), n)
    return ModelSpace(cs, GssfParams(0.0, 0.0, 0.0), "cosymplectic-flat-{0}".format(dim))


def kenmotsu_hyperbolic(n=1, box=None):
    """Warped product dt² + e^{2t}(flat ℂ^n), coordinates (t, x1, y1, ...)."""
    dim = 2 * n + 1
    eye = torch.eye(dim, dtype=DTYPE)
    phi0 = _complex_phi(n, 1, dim)
    e_t = eye[0]

    def g(p):
        w = torch.exp(2.0 * p[0])
        diag = torch.cat([torch.ones_like(p[:1]), w.expand(2 * n)])
        return torch.diag(diag)

    metric = MetricModel(dim, g, box or (), "warped")
    cs = ContactStructure(metric, lambda p: phi0 + 0.0 * p.sum(), lambda p: e_t + 0.0 * p.sum(),
                          lambda p: e_t + 0.0 * p.sum(), n)
    return ModelSpace(cs, GssfParams(-1.0, 0.0, 0.0), "kenmotsu-h{0}".format(dim), 0.0, 1.0)


def sasakian_standard(n=1, box=None):
    """Standard Sasakian structure on ℝ^{2n+1}, coordinates (x1, y1, ..., xn, yn, z).

    η = ½(dz − Σ y_i dx_i), ξ = 2∂z, g = η⊗η + ¼Σ(dx_i² + dy_i²); φ-sectional
    curvature −3.
    """
    dim = 2 * n + 1
    z = dim - 1
    xs = [2 * i for i in range(n)]
    ys = [2 * i + 1 for i in range(n)]
    e_z = torch.eye(dim, dtype=DTYPE)[z]
    # dη/dy_i selects the x_i slot
    sel = torch.zeros((dim, dim), dtype=DTYPE)
    for x, y in zip(xs, ys):
        sel[x, y] = 1.0
    base_phi = torch.zeros((dim, dim), dtype=DTYPE)
    for x, y in zip(xs, ys):
        base_phi[y, x] = -1.0
        base_phi[x, y] = 1.0

    def eta(p):
        return 0.5 * e_z - 0.5 * (sel @ p)

    def g(p):
        e = eta(p)
        return torch.outer(e, e) + 0.25 * (torch.eye(dim, dtype=DTYPE) - torch.outer(e_z, e_z))

    def phi(p):
        # φ∂y_i = ∂x_i + y_i ∂z
        zrow = torch.zeros((dim, dim), dtype=DTYPE)
        zrow = zrow + torch.outer(e_z, p * _y_mask(dim, ys))
        return base_phi + zrow

    metric = MetricModel(dim, g, box or (), "contact")
    cs = ContactStructure(metric, phi, lambda p: 2.0 * e_z + 0.0 * p.sum(), eta, n)
    return ModelSpace(cs, sasakian_params(-3.0), "sasakian-r{0}".format(dim), 1.0, 0.0)


def _y_mask(dim, ys):
    mask = torch.zeros(dim, dtype=DTYPE)
    mask[ys] = 1.0
    return mask


SPACE_BUILDERS = OrderedDict(
    [
        ("cosymplectic-flat-3", lambda box=None: cosymplectic_flat(1, box)),
        ("kenmotsu-h3", lambda box=None: kenmotsu_hyperbolic(1, box)),
        ("kenmotsu-h5", lambda box=None: kenmotsu_hyperbolic(2, box)),
        ("sasakian-r3", lambda box=None: sasakian_standard(1, box)),
        ("sasakian-r5", lambda box=None: sasakian_standard(2, box)),
    ]
)


def space_names():
    return list(SPACE_BUILDERS)


def builtin_space(name: str, box=None) -> ModelSpace:
    if name not in SPACE_BUILDERS:
        raise CatalogError("space", name, SPACE_BUILDERS)
    space = SPACE_BUILDERS[name](box)
    logger.debug("resolved space {0} params={1}".format(name, space.params.as_tuple()))
    return space
