# -*- coding:utf-8 -*-
from collections import OrderedDict

import torch

from gssflab.contact import ModelSpace, builtin_space
from gssflab.errors import CatalogError

from .embedding import EmbeddingModel

__all__ = ["builtin_embedding", "embedding_names", "identity_embedding", "EMBEDDING_SPACES"]


def _r3_in_r5(q):
    # (x1, y1, z) -> (x1, y1, 0, 0, z)
    zero = torch.zeros_like(q[:1])
    return torch.cat([q[:2], zero, zero, q[2:]])


def _h3_in_h5(q):
    # (t, x1, y1) -> (t, x1, y1, 0, 0)
    zero = torch.zeros_like(q[:1])
    return torch.cat([q, zero, zero])


def _slice_anti_invariant(q):
    # (x1, z) -> (x1, 0, 0, 0, z); φ∂x1 = −∂y1 leaves the slice
    zero = torch.zeros_like(q[:1])
    return torch.cat([q[:1], zero, zero, zero, q[1:]])


def _circle(q):
    return torch.stack([torch.cos(q[0]), torch.sin(q[0]), torch.zeros_like(q[0])])


EMBEDDING_SPACES = OrderedDict(
    [
        ("r3-in-r5-sasakian", ("sasakian-r5", _r3_in_r5, 3)),
        ("h3-in-h5-kenmotsu", ("kenmotsu-h5", _h3_in_h5, 3)),
        ("slice-anti-invariant", ("sasakian-r5", _slice_anti_invariant, 2)),
        ("circle-calibration", ("cosymplectic-flat-3", _circle, 1)),
    ]
)


def embedding_names():
    return list(EMBEDDING_SPACES) + ["identity"]


def identity_embedding(space) -> EmbeddingModel:
    return EmbeddingModel(lambda q: q + 0.0, space, space.dim, space.sample_box, "identity")


def builtin_embedding(name: str, space=None) -> EmbeddingModel:
    """Resolve a catalog embedding; ``identity`` needs the ambient ``space``."""
    if name == "identity":
        if space is None:
            raise CatalogError("embedding", name, ["identity requires an ambient space"])
        if isinstance(space, str):
            space = builtin_space(space)
        return identity_embedding(space)
    if name not in EMBEDDING_SPACES:
        raise CatalogError("embedding", name, embedding_names())
    space_name, fn, m = EMBEDDING_SPACES[name]
    if space is not None:
        given = space if isinstance(space, str) else space.name
        if given != space_name:
            raise CatalogError("embedding", name, [n for n, v in EMBEDDING_SPACES.items() if v[0] == given])
    ambient = space if isinstance(space, ModelSpace) else builtin_space(space_name)
    return EmbeddingModel(fn, ambient, m, (), name)
