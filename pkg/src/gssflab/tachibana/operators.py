# -*- coding:utf-8 -*-
"""The wedge endomorphism and the Tachibana tensor Q(E, T).

Two evaluation paths are provided. ``wedge``/``q_operator`` act on explicit
vectors and a callable T; ``wedge_tensor``/``q_tensor`` build the full
component arrays in submanifold coordinates. Values of E and T are allowed
to carry extra (normal) axes; Q then takes the tensor product of the two
value spaces, E's axes first.
"""

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import torch

from gssflab.utils import as_point, max_abs

__all__ = [
    "BilinearInput",
    "METRIC",
    "RICCI",
    "SIGMA",
    "wedge_terms",
    "wedge",
    "q_operator",
    "wedge_tensor",
    "q_tensor",
    "evaluate",
]

METRIC = "metric"
RICCI = "ricci"
SIGMA = "sigma"

SYMMETRY_TOL = 1e-10
_LETTERS = "abcdfghijk"


def _outer(c, v):
    return c.reshape(c.shape + (1,) * v.dim()) * v


@dataclass(frozen=True)
class BilinearInput:
    """A symmetric (0,2) form E, possibly normal-valued (``values[a, b, ...]``)."""

    values: torch.Tensor
    label: str = METRIC

    def __post_init__(self):
        if self.label not in (METRIC, RICCI, SIGMA):
            raise ValueError("label must be one of metric, ricci, sigma; got {0!r}".format(self.label))
        v = self.values
        if v.dim() < 2 or v.shape[0] != v.shape[1]:
            raise ValueError("bilinear input needs shape (m, m, ...), got {0}".format(tuple(v.shape)))
        asym = max_abs(v - v.transpose(0, 1))
        if asym > SYMMETRY_TOL * max(1.0, max_abs(v)):
            raise ValueError("bilinear input is not symmetric (residual {0:.3e})".format(asym))

    @property
    def m(self):
        return self.values.shape[0]

    def __call__(self, X, Y):
        return torch.einsum("ab...,a,b->...", self.values, as_point(X), as_point(Y))


def wedge_terms(E: BilinearInput, X, Y, Z) -> List[Tuple[torch.Tensor, torch.Tensor]]:
    """(X ∧_E Y)Z as ``[(E(Y,Z), X), (-E(X,Z), Y)]`` coefficient/vector pairs."""
    X, Y, Z = as_point(X), as_point(Y), as_point(Z)
    return [(E(Y, Z), X), (-E(X, Z), Y)]


def wedge(E: BilinearInput, X, Y, Z) -> torch.Tensor:
    """(X ∧_E Y)Z = E(Y,Z)X - E(X,Z)Y; normal-valued E yields coefficient ⊗ vector."""
    return sum(_outer(c, v) for c, v in wedge_terms(E, X, Y, Z))


def q_operator(E: BilinearInput, T: Callable[[Sequence[torch.Tensor]], torch.Tensor], args, X, Y) -> torch.Tensor:
    """Q(E,T)(X1..Xk; X, Y) = -Σ_i T(X1, .., (X ∧_E Y)Xi, .., Xk)."""
    args = [as_point(a) for a in args]
    if not args:
        raise ValueError("Q(E, T) needs at least one argument slot")
    total = None
    for i, Z in enumerate(args):
        for c, v in wedge_terms(E, X, Y, Z):
            term = _outer(c, T(args[:i] + [v] + args[i + 1 :]))
            total = -term if total is None else total - term
    return total


def wedge_tensor(E: BilinearInput) -> torch.Tensor:
    """``W[c, x, y, z, ...]`` = component c of (∂x ∧_E ∂y)∂z."""
    v = E.values
    eye = torch.eye(E.m, dtype=v.dtype)
    return torch.einsum("yz...,cx->cxyz...", v, eye) - torch.einsum("xz...,cy->cxyz...", v, eye)


def q_tensor(E: BilinearInput, T: torch.Tensor, k: int) -> torch.Tensor:
    """Components ``Q[i1..ik, x, y, *E-axes, *T-axes]`` of Q(E, T) for T with k leading slots."""
    m = E.m
    if k < 1 or k > len(_LETTERS):
        raise ValueError("unsupported number of slots: {0}".format(k))
    ve, vt = tuple(E.values.shape[2:]), tuple(T.shape[k:])
    W = wedge_tensor(E).reshape((m, m, m, m, -1))
    Tf = T.reshape((m,) * k + (-1,))
    letters = _LETTERS[:k]
    out = None
    for s in range(k):
        t_sub = letters[:s] + "z" + letters[s + 1 :] + "t"
        subs = "{0},zxy{1}e->{2}xyet".format(t_sub, letters[s], letters)
        term = torch.einsum(subs, Tf, W)
        out = -term if out is None else out - term
    return out.reshape((m,) * (k + 2) + ve + vt)


def evaluate(T: torch.Tensor, *vectors) -> torch.Tensor:
    """Contract the leading slots of a component array with the given vectors."""
    out = T
    for v in vectors:
        out = torch.tensordot(as_point(v), out, dims=([0], [0]))
    return out
