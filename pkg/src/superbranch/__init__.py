"""Highest-weight branching rules for unitary gl(m|n)-modules."""

from .branching import (
    branch_type1,
    interlacing_candidates,
    branch_type2,
    classical_branch,
    gt_count,
    gt_patterns,
    iter_gt_patterns,
    kac_branch,
    pieri,
    poly_branch,
)
from .charpoly import CharPoly
from .classify import UnitaryClass1, UnitaryClass2, Verdict, classify_type1, classify_type2, is_typical, vanishing_pairs
from .oracle import (
    Report,
    char_unitary,
    classical_char,
    dim_unitary,
    hook_tableau_char,
    hook_tableau_dim,
    hook_tableaux,
    howe_check,
    kac_char,
    kac_dim,
    module_char,
    module_dim,
    verify_branch,
    weyl_dim,
)
from .partitions import (
    Partition,
    conjugate,
    dual_weight,
    hook_from_atypical,
    is_hook,
    lowest_weight_poly,
    natural_weight,
    parse_partition,
    removable_vertical_strips,
    vertical_strips,
)
from .weights import (
    ClassicalWeight,
    NotDominantError,
    NotUnitaryError,
    SuperWeight,
    WeightError,
    atyp_form,
    format_weight,
    is_dominant,
    is_integral,
    parse_weight,
    rho,
    twist,
    weight_sum,
)

__version__ = "0.1.0"
