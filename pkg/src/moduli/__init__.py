"""
Moduli dimensions, truncations, crystals and witness polygons
"""
from .dimension import (
    DimReport,
    PropertyReport,
    check_dim_bound,
    hyperelliptic_locus_dim,
    moduli_dim,
    trigonal_locus_dim,
    upper_bound_U,
    verify_U_properties,
)
from .truncation import Cut, Truncation, ab_bound_holds, boundary_row_counts, cut_penalty, strip_normalize, truncate
from .crystal import find_crystal, long_strip_family, shear_to_crystal, two_row_relaxation
from .witnesses import (
    chrangledim,
    gap_check,
    triangular_decomposition,
    truncated_rectangle,
    witness_d4,
    witness_d5,
    witness_truncated_rectangle,
)
