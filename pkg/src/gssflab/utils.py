# -*- coding:utf-8 -*-

import torch
from funlog import getLogger

logger = getLogger("gssflab")

DTYPE = torch.float64


def as_point(p):
    """Coerce a point, vector or nested list to a float64 CPU tensor."""
    return torch.as_tensor(p, dtype=DTYPE)


def sample_points(box, count, seed):
    """Uniform seeded samples from a per-coordinate box ``[(lo, hi), ...]``."""
    gen = torch.Generator().manual_seed(int(seed))
    lo = torch.tensor([b[0] for b in box], dtype=DTYPE)
    hi = torch.tensor([b[1] for b in box], dtype=DTYPE)
    u = torch.rand((int(count), len(box)), generator=gen, dtype=DTYPE)
    return lo + (hi - lo) * u


def random_vectors(dim, count, seed):
    gen = torch.Generator().manual_seed(int(seed))
    return torch.randn((int(count), dim), generator=gen, dtype=DTYPE)


def max_abs(t):
    if t.numel() == 0:
        return 0.0
    return float(t.abs().max())


def format_residual(value):
    # locale-free, fixed precision so reports compare byte for byte
    return format(float(value), ".9e")
