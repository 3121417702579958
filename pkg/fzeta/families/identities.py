"""
Тождества семейств: пары Концевича, разложения σ и σ* в ряды,
класс пары σ* в базисе T.
"""

from __future__ import annotations
from dataclasses import dataclass
from math import comb
from typing import Dict

from fzeta.core.exceptions import VerificationError
from fzeta.core.models import ConditionReport
from fzeta.core.types import FamilyKind
from fzeta.exactpoly.poly import IntPoly
from fzeta.exactpoly.qanalog import pochhammer, pochhammer_one_minus
from fzeta.exactpoly.series import PowerSeriesTrunc, series_inverse, series_mul
from fzeta.families.generators import FamilySpec, partial_sums
from fzeta.grothendieck.classes import GrothClass, to_torus_basis
from fzeta.habiro.indvariety import check_constructible_f1


def kontsevich_pair_identity(k: int, mutate: bool = False) -> bool:
    """
    P_{2k−1} + P_{2k} = (q^{2k} − 2)(q^{2k−1} − 1)···(q − 1), P_m = (1 − q)···(1 − q^m).

    Args:
        k: Номер пары (k >= 1)
        mutate: Заменить −2 на +2 в правой части (контроль: должно дать False)
    """
    if k < 1:
        raise VerificationError(f"Пары Концевича нумеруются с k = 1, получено {k}")
    lhs = pochhammer_one_minus(2 * k - 1) + pochhammer_one_minus(2 * k)
    factor = IntPoly.monomial(2 * k) + (2 if mutate else -2)
    return lhs == factor * pochhammer(2 * k - 1)


def kontsevich_constructible_report(N: int) -> ConditionReport:
    """Суммарный класс X_{K,N} = Σ_{k=0}^{N} (1 − L)···(1 − L^k) в базисе T."""
    terms = FamilySpec(FamilyKind.KONTSEVICH).terms(N + 1)
    return check_constructible_f1([terms], labels=[f"X_K,{N}"])


def kontsevich_pair_report(k: int) -> ConditionReport:
    """Пара слагаемых 2k − 1 и 2k отдельно."""
    terms = FamilySpec(FamilyKind.KONTSEVICH).terms(2 * k + 1)
    return check_constructible_f1([terms[2 * k - 1 : 2 * k + 1]], labels=[f"pair {k}"])


def _plus_product(n: int, order: int) -> PowerSeriesTrunc:
    """(1 + q)(1 + q²)···(1 + qⁿ) как ряд."""
    p = IntPoly.one()
    for i in range(1, n + 1):
        p = p.shift(i) + p
    return PowerSeriesTrunc.from_poly(p, order)


def _odd_minus_product(n: int, order: int) -> PowerSeriesTrunc:
    """(1 − q)(1 − q³)···(1 − q^{2n−1}) как ряд."""
    p = IntPoly.one()
    for i in range(1, n + 1):
        p = p - p.shift(2 * i - 1)
    return PowerSeriesTrunc.from_poly(p, order)


def sigma_hypergeometric(order: int) -> PowerSeriesTrunc:
    """Σ_n q^{n(n+1)/2} / ((1 + q)···(1 + qⁿ))."""
    total = PowerSeriesTrunc(order)
    n = 0
    while n * (n + 1) // 2 <= order:
        num = PowerSeriesTrunc.from_poly(IntPoly.monomial(n * (n + 1) // 2), order)
        total = total + series_mul(num, series_inverse(_plus_product(n, order)))
        n += 1
    return total


def sigma_star_hypergeometric(order: int) -> PowerSeriesTrunc:
    """2 Σ_{n>=1} (−1)ⁿ q^{n²} / ((1 − q)(1 − q³)···(1 − q^{2n−1}))."""
    total = PowerSeriesTrunc(order)
    n = 1
    while n * n <= order:
        num = PowerSeriesTrunc.from_poly(IntPoly.monomial(n * n, 2 * (-1) ** n), order)
        total = total + series_mul(num, series_inverse(_odd_minus_product(n, order)))
        n += 1
    return total


def sigma_habiro_series(order: int) -> PowerSeriesTrunc:
    """1 + Σ_{m>=0} q^{m+1}(q)_m; слагаемое m имеет порядок m + 1."""
    sums = partial_sums(FamilySpec(FamilyKind.SIGMA), order)
    return PowerSeriesTrunc.from_poly(sums[order], order)


def sigma_star_habiro_series(order: int) -> PowerSeriesTrunc:
    """2 Σ_k (−1)^{k+1} q^{k+1}(q² − 1)···(q^{2k} − 1)."""
    if order == 0:
        return PowerSeriesTrunc(0)
    sums = partial_sums(FamilySpec(FamilyKind.SIGMA_STAR), order - 1)
    return PowerSeriesTrunc.from_poly(sums[order - 1], order)


def sigma_series_expansion(order: int) -> PowerSeriesTrunc:
    """
    Ряд σ до q^order; гипергеометрическая запись сверяется с записью Хабиро.

    Raises:
        VerificationError: Если записи расходятся
    """
    hyper = sigma_hypergeometric(order)
    habiro = sigma_habiro_series(order)
    if hyper != habiro:
        raise VerificationError(f"σ: разложения расходятся до порядка {order}")
    return hyper


def sigma_star_series_expansion(order: int) -> PowerSeriesTrunc:
    """Ряд σ* до q^order с той же сверкой."""
    hyper = sigma_star_hypergeometric(order)
    habiro = sigma_star_habiro_series(order)
    if hyper != habiro:
        raise VerificationError(f"σ*: разложения расходятся до порядка {order}")
    return hyper


@dataclass(frozen=True)
class SigmaStarPairReport:
    """
    Класс L^{4ℓ+1} − L − 1 в базисе T и его сравнение с опорной записью.

    Attributes:
        ell: ℓ >= 1
        pair_class: L^{4ℓ+1} − L − 1
        computed: Вычисленное разложение в базисе T
        displayed: Разложение 4ℓ·T + Σ_{k=2}^{4ℓ+1} C(4ℓ+1, k) T^k
        diff: computed − displayed (только ненулевые)
        difference_identity: Разность соседних слагаемых σ* равна классу 𝒴_ℓ
    """

    ell: int
    pair_class: GrothClass
    computed: Dict[int, int]
    displayed: Dict[int, int]
    diff: Dict[int, int]
    difference_identity: bool


def sigma_star_difference_identity(ell: int) -> bool:
    """q^{2ℓ+1}Π_{i<=2ℓ}(q^{2i} − 1) − q^{2ℓ}Π_{i<2ℓ}(q^{2i} − 1) = [𝒴_ℓ]."""
    base = IntPoly.one()
    for i in range(1, 2 * ell):
        base = base.times_q_power_minus_one(2 * i)
    longer = base.times_q_power_minus_one(4 * ell)
    lhs = longer.shift(2 * ell + 1) - base.shift(2 * ell)
    y_class = base.shift(2 * ell) * (IntPoly.monomial(4 * ell + 1) - IntPoly((1, 1)))
    return lhs == y_class


def sigma_star_pair_class(ell: int) -> SigmaStarPairReport:
    """Разложение L^{4ℓ+1} − L − 1 и расхождение с приведённой записью."""
    if ell < 1:
        raise VerificationError(f"ℓ должно быть >= 1, получено {ell}")
    top = 4 * ell + 1
    pair = GrothClass.from_poly(IntPoly.monomial(top) - IntPoly((1, 1)))
    computed = to_torus_basis(pair)
    displayed = {1: 4 * ell}
    displayed.update({k: comb(top, k) for k in range(2, top + 1)})
    keys = set(computed) | set(displayed)
    diff = {k: computed.get(k, 0) - displayed.get(k, 0) for k in sorted(keys)}
    return SigmaStarPairReport(
        ell=ell,
        pair_class=pair,
        computed=computed,
        displayed=displayed,
        diff={k: v for k, v in diff.items() if v},
        difference_identity=sigma_star_difference_identity(ell),
    )
