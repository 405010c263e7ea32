"""Brauer groups of localized integers, descent ledgers and the parts of Br(M_S)."""

from .algebra import CyclicAlgebraTable, NotCyclicError, cyclic_algebra
from .fields import (
    CubicField,
    QuarticCharacterData,
    RamifiedPrimeError,
    cubic_field_data,
    cubic_fields_ramified_in,
    quartic_character_data,
    residue_character_order,
)
from .ledger import FIGURES, RULES, LedgerError, SpectralLedger, descent_ledger
from .localized import LADDER, LocalizedBrauer, br_localized_integers, truncated_kernel
from .parts import (
    BrauerOfModuli,
    HypothesisError,
    Part,
    TwoExtension,
    UnsupportedProfileError,
    brauer_of_moduli,
    localized_two_part_closed_form,
    p_part_large,
    resolve_two_extension,
    three_part,
    two_part,
)
from .profiles import (
    BaseProfile,
    GSubgroup,
    algebraically_closed,
    finite_field,
    g_subgroup,
    gaussian_localized,
    localized_integers,
    profile_by_name,
)
from .shapes import GroupShape
from .verdict import MODES, WITNESS_CURVES, VerdictError, final_verdict
from .witness import (
    THREE_ADIC_CLASSES,
    TWO_ADIC_CLASSES,
    Witness,
    combination_label,
    three_adic_witness,
    two_adic_witness,
    witness_obstruction_check,
)

__all__ = [
    "CyclicAlgebraTable", "NotCyclicError", "cyclic_algebra",
    "CubicField", "QuarticCharacterData", "RamifiedPrimeError", "cubic_field_data",
    "cubic_fields_ramified_in", "quartic_character_data", "residue_character_order",
    "FIGURES", "RULES", "LedgerError", "SpectralLedger", "descent_ledger",
    "LADDER", "LocalizedBrauer", "br_localized_integers", "truncated_kernel",
    "BrauerOfModuli", "HypothesisError", "Part", "TwoExtension", "UnsupportedProfileError",
    "brauer_of_moduli", "localized_two_part_closed_form", "p_part_large", "resolve_two_extension",
    "three_part", "two_part",
    "BaseProfile", "GSubgroup", "algebraically_closed", "finite_field", "g_subgroup",
    "gaussian_localized", "localized_integers", "profile_by_name",
    "GroupShape", "MODES", "WITNESS_CURVES", "VerdictError", "final_verdict",
    "THREE_ADIC_CLASSES", "TWO_ADIC_CLASSES", "Witness", "combination_label",
    "three_adic_witness", "two_adic_witness", "witness_obstruction_check",
]
