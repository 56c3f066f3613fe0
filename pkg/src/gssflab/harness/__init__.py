from .config import DEFAULT_EMBEDDINGS, HarnessConfig, Scenario, load_config
from .equivalence import EQUIVALENCE_ROWS, equivalence_matrix
from .report import (
    EXIT_CODES,
    FAIL,
    FORWARD,
    IDENTITY,
    INCONCLUSIVE,
    PASS,
    Precondition,
    VerificationReport,
    dump_report,
    write_report,
)
from .theorems import THEOREMS, Theorem, derivation_identity_check, preconditions, run_theorem, theorem_ids

__all__ = [
    "HarnessConfig",
    "Scenario",
    "load_config",
    "DEFAULT_EMBEDDINGS",
    "Precondition",
    "VerificationReport",
    "dump_report",
    "write_report",
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "FORWARD",
    "IDENTITY",
    "EXIT_CODES",
    "Theorem",
    "THEOREMS",
    "theorem_ids",
    "preconditions",
    "run_theorem",
    "derivation_identity_check",
    "equivalence_matrix",
    "EQUIVALENCE_ROWS",
]
