# -*- coding:utf-8 -*-
from dataclasses import dataclass
from typing import Tuple

import torch

from gssflab.errors import MetricInversionError, SlotIndexError, VarianceMismatchError
from gssflab.utils import DTYPE

__all__ = ["UP", "DOWN", "TensorValue", "contract", "metric_adjust", "invert_metric"]

UP = "up"
DOWN = "down"

MAX_DIM = 7
COND_LIMIT = 1e12


@dataclass(frozen=True)
class TensorValue:
    """Dense multi-index array at a point.

    ``entries`` has shape ``(dims,) * len(slots)``; ``slots`` holds one variance
    marker (``"up"`` or ``"down"``) per index.
    """

    dims: int
    slots: Tuple[str, ...]
    entries: torch.Tensor

    def __post_init__(self):
        if not 1 <= self.dims <= MAX_DIM:
            raise ValueError("dims must be in 1..{0}, got {1}".format(MAX_DIM, self.dims))
        for s in self.slots:
            if s not in (UP, DOWN):
                raise ValueError("slot variance must be 'up' or 'down', got {0!r}".format(s))
        entries = torch.as_tensor(self.entries, dtype=DTYPE)
        if entries.shape != (self.dims,) * len(self.slots):
            raise ValueError(
                "entries shape {0} does not match dims={1} and {2} slots".format(
                    tuple(entries.shape), self.dims, len(self.slots)
                )
            )
        object.__setattr__(self, "slots", tuple(self.slots))
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self):
        return len(self.slots)

    @classmethod
    def scalar(cls, value, dims):
        return cls(dims, (), torch.as_tensor(value, dtype=DTYPE))

    def __add__(self, other):
        self._check_compatible(other)
        return TensorValue(self.dims, self.slots, self.entries + other.entries)

    def __sub__(self, other):
        self._check_compatible(other)
        return TensorValue(self.dims, self.slots, self.entries - other.entries)

    def __mul__(self, a):
        return TensorValue(self.dims, self.slots, self.entries * a)

    __rmul__ = __mul__

    def _check_compatible(self, other):
        if self.dims != other.dims or self.slots != other.slots:
            raise VarianceMismatchError(
                "cannot combine tensors with slots {0} and {1}".format(self.slots, other.slots)
            )


def _check_slot(t, slot):
    if not 0 <= slot < t.rank:
        raise SlotIndexError("slot {0} out of range for rank-{1} tensor".format(slot, t.rank))


def contract(t: TensorValue, slot_a: int, slot_b: int) -> TensorValue:
    """Sum an up slot against a down slot; remaining slots keep their order."""
    _check_slot(t, slot_a)
    _check_slot(t, slot_b)
    if slot_a == slot_b:
        raise SlotIndexError("cannot contract slot {0} with itself".format(slot_a))
    if t.slots[slot_a] == t.slots[slot_b]:
        raise VarianceMismatchError(
            "slots {0} and {1} are both {2!r}".format(slot_a, slot_b, t.slots[slot_a])
        )
    entries = torch.diagonal(t.entries, dim1=slot_a, dim2=slot_b).sum(-1)
    slots = tuple(s for i, s in enumerate(t.slots) if i not in (slot_a, slot_b))
    return TensorValue(t.dims, slots, entries)


def invert_metric(g) -> torch.Tensor:
    """Inverse of a symmetric metric matrix, rejecting ill-conditioned input."""
    g = torch.as_tensor(g.entries if isinstance(g, TensorValue) else g, dtype=DTYPE)
    cond = float(torch.linalg.cond(g))
    if not cond < COND_LIMIT:
        raise MetricInversionError("metric is numerically singular", cond)
    return torch.linalg.inv(g)


def metric_adjust(t: TensorValue, slot: int, g: TensorValue, direction: str) -> TensorValue:
    """Raise (``direction="up"``) or lower (``"down"``) one index with ``g``."""
    _check_slot(t, slot)
    if direction not in (UP, DOWN):
        raise ValueError("direction must be 'up' or 'down', got {0!r}".format(direction))
    if t.slots[slot] == direction:
        raise VarianceMismatchError(
            "slot {0} is already {1!r}".format(slot, direction)
        )
    if g.slots != (DOWN, DOWN) or g.dims != t.dims:
        raise VarianceMismatchError("metric must be a (0,2) tensor of matching dimension")
    m = invert_metric(g) if direction == UP else g.entries
    moved = torch.tensordot(m, t.entries, dims=([1], [slot]))
    entries = torch.movedim(moved, 0, slot)
    slots = t.slots[:slot] + (direction,) + t.slots[slot + 1 :]
    return TensorValue(t.dims, slots, entries)
