from .curvature import (
    c_dot_nabla_sigma,
    c_dot_sigma,
    concircular,
    concircular_tensor,
    dot_nabla_sigma_tensor,
    dot_sigma_tensor,
    r_dot_nabla_sigma,
    r_dot_sigma,
)
from .operators import (
    METRIC,
    RICCI,
    SIGMA,
    BilinearInput,
    evaluate,
    q_operator,
    q_tensor,
    wedge,
    wedge_tensor,
    wedge_terms,
)
from .parallelism import (
    PARALLELISM_KINDS,
    PSEUDO_KINDS,
    ParallelismResidual,
    frame_tensor,
    parallelism_residual,
    parallelism_tensor,
)

__all__ = [
    "BilinearInput",
    "METRIC",
    "RICCI",
    "SIGMA",
    "wedge",
    "wedge_terms",
    "wedge_tensor",
    "q_operator",
    "q_tensor",
    "evaluate",
    "r_dot_sigma",
    "r_dot_nabla_sigma",
    "concircular",
    "concircular_tensor",
    "c_dot_sigma",
    "c_dot_nabla_sigma",
    "dot_sigma_tensor",
    "dot_nabla_sigma_tensor",
    "ParallelismResidual",
    "PARALLELISM_KINDS",
    "PSEUDO_KINDS",
    "parallelism_tensor",
    "parallelism_residual",
    "frame_tensor",
]
