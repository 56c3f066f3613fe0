from .catalog import EMBEDDING_SPACES, builtin_embedding, embedding_names, identity_embedding
from .checks import (
    InvarianceReport,
    Lemma31Report,
    check_invariant,
    induced_space,
    induced_structure,
    is_totally_geodesic,
    lemma31_check,
)
from .embedding import (
    EmbeddingModel,
    SubmanifoldFrame,
    induced_metric,
    normal_candidates,
    normal_frame_fn,
    submanifold_frame,
    tangent_coords_fn,
)
from .geometry import (
    PointGeometry,
    as_sigma,
    gauss_split,
    nabla_sigma,
    point_geometry,
    second_fundamental_form,
    shape_operator,
    shape_operator_compatibility,
    weingarten_operator,
)
from .sigma import EMBEDDING_CONNECTION, FLAT_CONNECTION, GEOMETRIC, SYNTHETIC, SigmaField, geometric_sigma, synth_sigma

__all__ = [
    "EmbeddingModel",
    "SubmanifoldFrame",
    "SigmaField",
    "PointGeometry",
    "InvarianceReport",
    "Lemma31Report",
    "induced_metric",
    "submanifold_frame",
    "normal_candidates",
    "normal_frame_fn",
    "tangent_coords_fn",
    "second_fundamental_form",
    "shape_operator",
    "weingarten_operator",
    "shape_operator_compatibility",
    "gauss_split",
    "nabla_sigma",
    "point_geometry",
    "as_sigma",
    "geometric_sigma",
    "synth_sigma",
    "check_invariant",
    "induced_structure",
    "induced_space",
    "lemma31_check",
    "is_totally_geodesic",
    "builtin_embedding",
    "embedding_names",
    "identity_embedding",
    "EMBEDDING_SPACES",
    "GEOMETRIC",
    "SYNTHETIC",
    "EMBEDDING_CONNECTION",
    "FLAT_CONNECTION",
]
