"""
Модуль habiro: усечённое кольцо Хабиро и инд-многообразия.
"""

from fzeta.habiro.ring import (
    HabiroElement,
    HabiroNormalForm,
    make,
    habiro_add,
    habiro_mul,
    normal_form,
    ev_n,
    ev_zeta,
    taylor_zeta,
    frobenius,
    inverse_lefschetz,
    inverse_series_partial_sum,
    inverse_identity_defect,
)
from fzeta.habiro.indvariety import (
    IndVarietySpec,
    check_ind_f1,
    check_ind_fzeta,
    check_constructible_f1,
)

__all__ = [
    # Ring
    "HabiroElement",
    "HabiroNormalForm",
    "make",
    "habiro_add",
    "habiro_mul",
    "normal_form",
    "ev_n",
    "ev_zeta",
    "taylor_zeta",
    "frobenius",
    "inverse_lefschetz",
    "inverse_series_partial_sum",
    "inverse_identity_defect",
    # Ind-varieties
    "IndVarietySpec",
    "check_ind_f1",
    "check_ind_fzeta",
    "check_constructible_f1",
]
