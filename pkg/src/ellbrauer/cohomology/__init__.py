"""Group cohomology of small finite groups with integer and finite coefficients."""

from .cohomology import CohomologyGroup, cohomology_data, compute_cohomology, group_cohomology
from .groups import FiniteGroup, cyclic_group, subgroup, symmetric_group_3
from .linalg import smith_normal_form, snf
from .maps import (
    ShortExactSequence,
    connecting_map,
    invariants_generator,
    restriction_transfer_data,
    transfer_composition_check,
)
from .modules import (
    FgAbelianGroup,
    GroupModule,
    coefficient_label,
    rho,
    rho_inclusion,
    rho_tilde,
    trivial_module,
    with_coefficients,
)
from .resolution import FreeResolution, bar_resolution, greedy_resolution, resolution_for, s3_subgroup

__all__ = [
    "CohomologyGroup", "cohomology_data", "compute_cohomology", "group_cohomology",
    "FiniteGroup", "cyclic_group", "subgroup", "symmetric_group_3", "smith_normal_form", "snf",
    "ShortExactSequence", "connecting_map", "invariants_generator", "restriction_transfer_data",
    "transfer_composition_check", "FgAbelianGroup", "GroupModule", "coefficient_label", "rho",
    "rho_inclusion", "rho_tilde", "trivial_module", "with_coefficients", "FreeResolution",
    "bar_resolution", "greedy_resolution", "resolution_for", "s3_subgroup",
]
