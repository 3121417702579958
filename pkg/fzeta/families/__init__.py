"""
Модуль families: семейства примеров, таблицы знаков и тождества.
"""

from fzeta.families.generators import (
    FamilySpec,
    gl_class,
    carlitz_class,
    carlitz_product_class,
    carlitz_torus_decomposition,
    default_cutoff,
    statement_cutoff,
    family_terms,
    partial_sums,
    partial_sum,
    ind_spec,
    gl_count,
)
from fzeta.families.signs import (
    primary_claim,
    secondary_claim,
    sign_table,
    primary_mismatches,
    secondary_mismatches,
    condition62_dual_report,
    numeric_aside_report,
    NUMERIC_ASIDES,
)
from fzeta.families.identities import (
    kontsevich_pair_identity,
    kontsevich_constructible_report,
    kontsevich_pair_report,
    sigma_series_expansion,
    sigma_star_series_expansion,
    sigma_hypergeometric,
    sigma_star_hypergeometric,
    sigma_habiro_series,
    sigma_star_habiro_series,
    sigma_star_pair_class,
    sigma_star_difference_identity,
    SigmaStarPairReport,
)

__all__ = [
    # Generators
    "FamilySpec",
    "gl_class",
    "carlitz_class",
    "carlitz_product_class",
    "carlitz_torus_decomposition",
    "default_cutoff",
    "statement_cutoff",
    "family_terms",
    "partial_sums",
    "partial_sum",
    "ind_spec",
    "gl_count",
    # Signs
    "primary_claim",
    "secondary_claim",
    "sign_table",
    "primary_mismatches",
    "secondary_mismatches",
    "condition62_dual_report",
    "numeric_aside_report",
    "NUMERIC_ASIDES",
    # Identities
    "kontsevich_pair_identity",
    "kontsevich_constructible_report",
    "kontsevich_pair_report",
    "sigma_series_expansion",
    "sigma_star_series_expansion",
    "sigma_hypergeometric",
    "sigma_star_hypergeometric",
    "sigma_habiro_series",
    "sigma_star_habiro_series",
    "sigma_star_pair_class",
    "sigma_star_difference_identity",
    "SigmaStarPairReport",
]
