from .catalog import SPACE_BUILDERS, builtin_space, space_names
from .structure import (
    ContactStructure,
    GssfParams,
    ModelSpace,
    ansatz_tensor,
    axiom_residuals,
    gssf_ansatz,
    sasakian_params,
)
from .validate import (
    GssfResidualReport,
    phi_sectional_curvature,
    residual_frame,
    validate_gssf,
    validate_space,
)

__all__ = [
    "ContactStructure",
    "GssfParams",
    "ModelSpace",
    "sasakian_params",
    "axiom_residuals",
    "gssf_ansatz",
    "ansatz_tensor",
    "builtin_space",
    "space_names",
    "SPACE_BUILDERS",
    "GssfResidualReport",
    "validate_gssf",
    "validate_space",
    "phi_sectional_curvature",
    "residual_frame",
]
