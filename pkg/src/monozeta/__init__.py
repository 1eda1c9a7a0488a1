"""Motivic and topological Igusa zeta functions of space monomial curves
whose semigroup is the semigroup of a plane branch.
"""

from __future__ import annotations

from .errors import (
    BadCharacteristic,
    BudgetExceeded,
    DomainError,
    GenerationFailed,
    InvalidSemigroup,
    MonozetaError,
    NonUnitDenominator,
    NoRepresentation,
    PoleHit,
    ResidueMismatch,
)
from .flatness import FlatnessReport, non_flat_threshold
from .gr_algebra import DenomFactor, LaurentL, MotRat, PolyT
from .invariants import candidate_poles, codim_B, c_ik, lct, residues, structural_pairs
from .jets import components, fiber_class, jet_class, poincare_truncated
from .motivic import ZetaAssembly, series_consistency, zeta_motivic
from .semigroup import SemigroupData, derive_structure, random_plane_semigroup, validate
from .topological import RatQs, check_specialization, global_equals_local_top, poles_with_residues, zeta_top

__version__ = "0.1.0"

__all__ = [
    "BadCharacteristic",
    "BudgetExceeded",
    "DomainError",
    "GenerationFailed",
    "InvalidSemigroup",
    "MonozetaError",
    "NonUnitDenominator",
    "NoRepresentation",
    "PoleHit",
    "ResidueMismatch",
    "FlatnessReport",
    "non_flat_threshold",
    "DenomFactor",
    "LaurentL",
    "MotRat",
    "PolyT",
    "candidate_poles",
    "codim_B",
    "c_ik",
    "lct",
    "residues",
    "structural_pairs",
    "components",
    "fiber_class",
    "jet_class",
    "poincare_truncated",
    "ZetaAssembly",
    "series_consistency",
    "zeta_motivic",
    "SemigroupData",
    "derive_structure",
    "random_plane_semigroup",
    "validate",
    "RatQs",
    "check_specialization",
    "global_equals_local_top",
    "poles_with_residues",
    "zeta_top",
]
