# -*- coding:utf-8 -*-
from dataclasses import dataclass, field, fields, replace
from typing import Dict, Optional, Tuple

from gssflab.contact import ModelSpace, builtin_space
from gssflab.errors import ConfigError, PreconditionError
from gssflab.submanifold import (
    GEOMETRIC,
    SYNTHETIC,
    EmbeddingModel,
    SigmaField,
    builtin_embedding,
    check_invariant,
    geometric_sigma,
    synth_sigma,
)
from gssflab.utils import logger

__all__ = ["HarnessConfig", "Scenario", "load_config", "DEFAULT_EMBEDDINGS"]

# embeddings with normal directions used when a scenario names only a space
DEFAULT_EMBEDDINGS = {
    "sasakian-r5": "r3-in-r5-sasakian",
    "kenmotsu-h5": "h3-in-h5-kenmotsu",
}


@dataclass(frozen=True)
class HarnessConfig:
    forward_tol: float = 1e-7
    identity_tol: float = 1e-6
    validate_tol: float = 1e-6
    samples: int = 50
    seed: int = 42
    random_tuples: int = 64
    boxes: Dict[str, Tuple[float, float]] = field(default_factory=dict)

    def space(self, name) -> ModelSpace:
        space = builtin_space(name)
        if name in self.boxes:
            space = builtin_space(name, (self.boxes[name],) * space.dim)
        return space

    def override(self, **kwargs) -> "HarnessConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


_FIELD_TYPES = {f.name: f.type for f in fields(HarnessConfig) if f.name != "boxes"}


def _parse_box(key, value):
    try:
        lo, hi = (float(v) for v in value.split(":"))
    except ValueError:
        raise ConfigError("{0}: expected lo:hi, got {1!r}".format(key, value))
    if not lo < hi:
        raise ConfigError("{0}: empty range {1!r}".format(key, value))
    return lo, hi


def load_config(path: Optional[str] = None, base: Optional[HarnessConfig] = None) -> HarnessConfig:
    """Read a ``key=value`` file on top of ``base`` (defaults when omitted)."""
    cfg = base or HarnessConfig()
    if path is None:
        return cfg
    values, boxes = {}, dict(cfg.boxes)
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as err:
        raise ConfigError("cannot read config {0}: {1}".format(path, err))
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("{0}:{1}: expected key=value".format(path, lineno))
        key, value = (s.strip() for s in line.split("=", 1))
        if key.startswith("box."):
            boxes[key[4:]] = _parse_box(key, value)
        elif key in _FIELD_TYPES:
            cast = int if _FIELD_TYPES[key] in (int, "int") else float
            try:
                values[key] = cast(value)
            except ValueError:
                raise ConfigError("{0}:{1}: bad value for {2}: {3!r}".format(path, lineno, key, value))
        else:
            raise ConfigError("{0}:{1}: unknown key {2!r}".format(path, lineno, key))
    cfg = replace(cfg, boxes=boxes, **values)
    if cfg.samples < 1 or cfg.random_tuples < 0:
        raise ConfigError("samples must be >= 1 and random_tuples >= 0")
    if min(cfg.forward_tol, cfg.identity_tol, cfg.validate_tol) <= 0:
        raise ConfigError("tolerances must be positive")
    logger.info("loaded config {0}".format(path))
    return cfg


@dataclass(frozen=True)
class Scenario:
    """A model space, an optional embedding and the σ provider to use on it."""

    space: str
    embedding: Optional[str] = None
    sigma_mode: str = GEOMETRIC
    samples: int = 50
    tol: float = 1e-7
    L1: Optional[float] = None
    seed: int = 42

    def __post_init__(self):
        if self.sigma_mode not in (GEOMETRIC, SYNTHETIC):
            raise ConfigError("sigma_mode must be geometric or synthetic, got {0!r}".format(self.sigma_mode))
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")

    def embedding_name(self) -> str:
        if self.embedding is not None:
            return self.embedding
        if self.sigma_mode == SYNTHETIC and self.space not in DEFAULT_EMBEDDINGS:
            raise PreconditionError("no embedding with normal directions is known for {0}".format(self.space))
        return DEFAULT_EMBEDDINGS.get(self.space, "identity")

    def resolve_embedding(self, config: Optional[HarnessConfig] = None) -> EmbeddingModel:
        config = config or HarnessConfig()
        space = config.space(self.space)
        e = builtin_embedding(self.embedding_name(), space)
        center = [0.5 * (lo + hi) for lo, hi in e.sample_box]
        if not check_invariant(e, center).invariant:
            raise PreconditionError("embedding {0} is not invariant in {1}".format(e.name, self.space))
        return e

    def resolve(self, config: Optional[HarnessConfig] = None) -> SigmaField:
        e = self.resolve_embedding(config)
        if self.sigma_mode == SYNTHETIC:
            return synth_sigma(self.seed, e)
        return geometric_sigma(e)

    def as_dict(self):
        return {
            "space": self.space,
            "embedding": self.embedding_name(),
            "sigma_mode": self.sigma_mode,
            "samples": self.samples,
            "tol": self.tol,
            "L1": self.L1,
            "seed": self.seed,
        }
