"""Rings R_f and modules I_f^k as multiplication and action tables."""

from .build import (build_module, build_ring, dual_pairing_matrix, gl2_invariance_witness,
                    intertwining_defects, inverse_different_map, is_gorenstein,
                    is_invertible_family, module_power_experiment, ring_disc,
                    specialize_table)
from .rewrite import MembershipError
from .tables import ActionTable, MultTable

__all__ = [
    "ActionTable", "MembershipError", "MultTable", "build_module", "build_ring",
    "dual_pairing_matrix", "gl2_invariance_witness", "intertwining_defects",
    "inverse_different_map", "is_gorenstein", "is_invertible_family",
    "module_power_experiment", "ring_disc", "specialize_table",
]
