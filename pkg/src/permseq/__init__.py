"""Exact permanents and determinants of the banded matrices whose values are
Jacobsthal and Jacobsthal-Lucas numbers."""

from .determinant_engine import DeterminantMethod, determinant, determinant_bareiss, determinant_laplace
from .errors import (
    CapExceededError,
    DomainError,
    NegativeEntryError,
    NotContractibleError,
    StuckContractionError,
)
from .matrix_core import (
    FamilyKind,
    Matrix,
    build,
    build_A,
    build_B,
    build_H,
    build_K,
    build_S,
    contract_column,
    contract_row,
    find_contractible_column,
    hadamard,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
)
from .permanent_engines import (
    ContractionStep,
    ContractionTrace,
    PermanentMethod,
    contraction_chain,
    permanent,
    permanent_contraction,
    permanent_laplace,
    permanent_ryser,
)
from .sequences import SequenceKind, cassini_residual, term, term_range
from .verify import (
    VerificationReport,
    verify_cassini,
    verify_contraction_invariance,
    verify_detper,
    verify_thm1,
    verify_thm2,
)

__version__ = "0.1.0"
