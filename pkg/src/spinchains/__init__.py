"""Chain combinatorics of scattered representations of SL(n, C)."""

from .chains import (
    Chain,
    ChainSet,
    OverlappingChainsError,
    canonical_order,
    extract_involution,
    involves_all_simple_reflections,
    is_interlaced,
    is_involution,
    is_linked,
    lambda_doubled,
)
from .lr import is_lattice_word, lr_coefficient, multiplicity_in_induced
from .scattered import (
    ScatteredRecord,
    brute_force_enumerate,
    build_record,
    canonical_form,
    count,
    display_order,
    expand,
    generate,
    is_u_small,
    reduce,
    spherical_family,
)
from .spin import (
    AlgorithmViolation,
    AppliedRule,
    Rule,
    SpinResult,
    TauLayout,
    apply_rule,
    classify_link,
    dirac_report,
    lowest_k_type,
    spin_lowest_k_type,
    verify_spin_identity,
)
from .weights import (
    Weight,
    dominant,
    from_fundamental,
    fundamental_pairing_signs,
    norm_sq,
    rho_doubled,
    spin_norm_sq,
    to_fundamental,
)

__all__ = [
    "AlgorithmViolation",
    "AppliedRule",
    "Chain",
    "ChainSet",
    "OverlappingChainsError",
    "Rule",
    "ScatteredRecord",
    "SpinResult",
    "TauLayout",
    "Weight",
    "apply_rule",
    "brute_force_enumerate",
    "build_record",
    "canonical_form",
    "canonical_order",
    "classify_link",
    "count",
    "dirac_report",
    "display_order",
    "dominant",
    "expand",
    "extract_involution",
    "from_fundamental",
    "fundamental_pairing_signs",
    "generate",
    "involves_all_simple_reflections",
    "is_interlaced",
    "is_involution",
    "is_lattice_word",
    "is_linked",
    "is_u_small",
    "lambda_doubled",
    "lowest_k_type",
    "lr_coefficient",
    "multiplicity_in_induced",
    "norm_sq",
    "reduce",
    "rho_doubled",
    "spherical_family",
    "spin_lowest_k_type",
    "spin_norm_sq",
    "to_fundamental",
    "verify_spin_identity",
]
