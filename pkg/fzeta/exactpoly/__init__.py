"""
Модуль exactpoly: точная арифметика многочленов, рядов и круговых колец.
"""

from fzeta.exactpoly.poly import IntPoly, divrem_unit, exact_div, binomial_shift, format_terms
from fzeta.exactpoly.laurent import LaurentPoly
from fzeta.exactpoly.series import (
    PowerSeriesTrunc,
    series_add,
    series_mul,
    series_inverse,
)
from fzeta.exactpoly.cyclotomic import (
    cyclotomic,
    euler_phi,
    RootOfUnity,
    CyclotomicInt,
    eval_root,
)
from fzeta.exactpoly.qanalog import (
    q_int,
    q_factorial,
    q_binomial,
    pochhammer,
    pochhammer_one_minus,
)

__all__ = [
    # Polynomials
    "IntPoly",
    "divrem_unit",
    "exact_div",
    "binomial_shift",
    "format_terms",
    "LaurentPoly",
    # Series
    "PowerSeriesTrunc",
    "series_add",
    "series_mul",
    "series_inverse",
    # Cyclotomic
    "cyclotomic",
    "euler_phi",
    "RootOfUnity",
    "CyclotomicInt",
    "eval_root",
    # q-analogs
    "q_int",
    "q_factorial",
    "q_binomial",
    "pochhammer",
    "pochhammer_one_minus",
]
