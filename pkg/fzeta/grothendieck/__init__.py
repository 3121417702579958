"""
Модуль grothendieck: классы в K₀(Var), сертификаты разложений и проверки условий.
"""

from fzeta.grothendieck.classes import (
    GrothClass,
    TorusDecomposition,
    CellDecomposition,
    LEFSCHETZ,
    TORUS,
    POINT,
    to_torus_basis,
    from_torus_basis,
    torify_affine,
    torify_punctured_affine,
    product_decomposition,
    product_of,
    union_decomposition,
)
from fzeta.grothendieck.conditions import (
    check_motivic_f1,
    check_eval_fzeta,
    eval_fzeta_orders,
    dominance_bound,
    check_interp_positivity,
    check_counting_f1,
    f1n_points,
    check_partial_eval,
    check_dual_torification,
    projective_dual_certificate,
    dual_certificate_matches,
)

__all__ = [
    # Classes
    "GrothClass",
    "TorusDecomposition",
    "CellDecomposition",
    "LEFSCHETZ",
    "TORUS",
    "POINT",
    "to_torus_basis",
    "from_torus_basis",
    "torify_affine",
    "torify_punctured_affine",
    "product_decomposition",
    "product_of",
    "union_decomposition",
    # Conditions
    "check_motivic_f1",
    "check_eval_fzeta",
    "eval_fzeta_orders",
    "dominance_bound",
    "check_interp_positivity",
    "check_counting_f1",
    "f1n_points",
    "check_partial_eval",
    "check_dual_torification",
    "projective_dual_certificate",
    "dual_certificate_matches",
]
