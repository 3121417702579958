"""
Генераторы семейств: GL, Карлица, σ, σ* и ряд Концевича.

Этот модуль содержит классы слагаемых, частичные суммы с отсечками,
принятыми по умолчанию, и описания инд-многообразий (α_m).
Слагаемые строятся инкрементально: P_m = P_{m−1}·(q^m − 1).
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from fzeta.core.exceptions import PolynomialError
from fzeta.core.types import FamilyKind
from fzeta.exactpoly.poly import IntPoly
from fzeta.exactpoly.qanalog import pochhammer
from fzeta.grothendieck.classes import (
    GrothClass,
    TorusDecomposition,
    product_of,
    torify_affine,
    torify_punctured_affine,
)
from fzeta.habiro.indvariety import IndVarietySpec


def gl_class(m: int) -> GrothClass:
    """[GL_m] = L^{m(m−1)/2}(L − 1)(L² − 1)···(L^m − 1); [GL_0] = 1."""
    if m < 0:
        raise PolynomialError(f"GL_m требует m >= 0, получено {m}")
    return GrothClass.from_poly(pochhammer(m).shift(m * (m - 1) // 2))


def carlitz_class(m: int) -> GrothClass:
    """E_{2m} = L^{m²}(L² − 1)(L⁴ − 1)···(L^{2m} − 1); E_0 = 1."""
    if m < 0:
        raise PolynomialError(f"E_2m требует m >= 0, получено {m}")
    p = IntPoly.one()
    for i in range(1, m + 1):
        p = p.times_q_power_minus_one(2 * i)
    return GrothClass.from_poly(p.shift(m * m))


def carlitz_torus_decomposition(m: int) -> TorusDecomposition:
    """Торификация A^{m²} × (A² ∖ 0) × (A⁴ ∖ 0) × ··· × (A^{2m} ∖ 0)."""
    parts = [torify_affine(m * m)]
    parts.extend(torify_punctured_affine(2 * i) for i in range(1, m + 1))
    return product_of(parts)


def carlitz_product_class(m: int) -> GrothClass:
    """Класс произведения из торификации; совпадает с carlitz_class(m)."""
    return carlitz_torus_decomposition(m).to_class()


@dataclass(frozen=True)
class FamilySpec:
    """
    Семейство и соглашения о частичных суммах.

    Слагаемые нумеруются с нуля; у σ нулевым слагаемым считается ведущая 1,
    так что partial_sum(c) = Σ_{m=0}^{c} term(m) для всех семейств.

    Attributes:
        kind: Семейство
        alternating: Для σ*: знак (−1)^{k+1} из записи ряда (True) или без него
            (False); отрицательные значения дополнительных утверждений считаются без знака
        cutoff_rule: Переопределение отсечки n -> индекс последнего слагаемого
    """

    kind: FamilyKind
    alternating: bool = True
    cutoff_rule: Optional[Callable[[int], int]] = None

    def sign_cutoff(self, n: int) -> int:
        """Индекс последнего слагаемого частичной суммы для порядка n."""
        if self.cutoff_rule is not None:
            return self.cutoff_rule(n)
        return default_cutoff(self.kind, n)

    def terms(self, count: int) -> List[IntPoly]:
        return family_terms(self, count)

    def term(self, m: int) -> IntPoly:
        return family_terms(self, m + 1)[m]

    def partial_sum(self, cutoff: int) -> IntPoly:
        if cutoff < 0:
            raise PolynomialError(f"Отсечка должна быть >= 0, получено {cutoff}")
        return partial_sums(self, cutoff)[cutoff]

    def ind_spec(self) -> IndVarietySpec:
        return ind_spec(self.kind, self.alternating)


def default_cutoff(kind: FamilyKind, n: int) -> int:
    """
    Отсечки по умолчанию.

    GL: m = 0..n−1; Карлиц и σ*: 0..n−1 для нечётных n, 0..n/2−1 для чётных;
    σ: ведущая 1 и слагаемые m = 0..n−1 ряда, то есть индексы 0..n;
    Концевич: 0..n−1.
    """
    if n < 1:
        raise PolynomialError(f"Порядок n должен быть >= 1, получено {n}")
    if kind in (FamilyKind.CARLITZ, FamilyKind.SIGMA_STAR):
        return n - 1 if n % 2 else n // 2 - 1
    if kind is FamilyKind.SIGMA:
        return n
    return n - 1


def statement_cutoff(kind: FamilyKind, n: int) -> int:
    """Буквальная отсечка ⨿_{m=0}^n GL_m для GL; для остальных семейств default_cutoff."""
    if kind is FamilyKind.GL:
        return n
    return default_cutoff(kind, n)


def family_terms(spec: FamilySpec, count: int) -> List[IntPoly]:
    """
    Первые count слагаемых ряда семейства.

    Args:
        spec: Семейство
        count: Количество слагаемых

    Returns:
        Список IntPoly длины count
    """
    out: List[IntPoly] = []
    p = IntPoly.one()
    kind = spec.kind
    for m in range(count):
        if kind is FamilyKind.GL:
            if m:
                p = p.times_q_power_minus_one(m)
            out.append(p.shift(m * (m - 1) // 2))
        elif kind is FamilyKind.CARLITZ:
            if m:
                p = p.times_q_power_minus_one(2 * m)
            out.append(p.shift(m * m))
        elif kind is FamilyKind.SIGMA:
            # слагаемое m >= 1 равно q^m (q)_{m−1}
            if m >= 2:
                p = p.times_q_power_minus_one(m - 1)
            out.append(IntPoly.one() if m == 0 else p.shift(m))
        elif kind is FamilyKind.SIGMA_STAR:
            if m:
                p = p.times_q_power_minus_one(2 * m)
            sign = (-1) ** (m + 1) if spec.alternating else 1
            out.append(p.shift(m + 1) * (2 * sign))
        elif kind is FamilyKind.KONTSEVICH:
            if m:
                p = -p.times_q_power_minus_one(m)
            out.append(p)
        else:
            raise PolynomialError(f"Неизвестное семейство {kind}")
    return out


def partial_sums(spec: FamilySpec, max_cutoff: int) -> List[IntPoly]:
    """Накопленные суммы S_0, ..., S_{max_cutoff}."""
    sums: List[IntPoly] = []
    acc = IntPoly.zero()
    for term in family_terms(spec, max_cutoff + 1):
        acc = acc + term
        sums.append(acc)
    return sums


def partial_sum(spec: FamilySpec, cutoff: int) -> IntPoly:
    return spec.partial_sum(cutoff)


def _gl_alpha(m: int) -> IntPoly:
    return IntPoly.monomial(m * (m - 1) // 2)


def _plus_one_product(m: int) -> IntPoly:
    """(q + 1)(q² + 1)···(q^m + 1)."""
    p = IntPoly.one()
    for i in range(1, m + 1):
        p = p.shift(i) + p
    return p


def _carlitz_alpha(m: int) -> IntPoly:
    return _plus_one_product(m).shift(m * m)


def _sigma_alpha(m: int) -> IntPoly:
    return IntPoly((1, 1)) if m == 0 else IntPoly.monomial(m + 1)


def _sigma_star_alpha(alternating: bool) -> Callable[[int], IntPoly]:
    def rule(k: int) -> IntPoly:
        sign = (-1) ** (k + 1) if alternating else 1
        return _plus_one_product(k).shift(k + 1) * (2 * sign)

    return rule


def _kontsevich_alpha(k: int) -> IntPoly:
    return IntPoly.constant((-1) ** k)


def ind_spec(kind: FamilyKind, alternating: bool = True) -> IndVarietySpec:
    """
    α_m семейства: Σ_{m<n} α_m (q)_m совпадает с частичной суммой default_cutoff
    для GL, σ и Концевича; для Карлица и σ* — с суммой первых n слагаемых.
    """
    rules: Dict[FamilyKind, Callable[[int], IntPoly]] = {
        FamilyKind.GL: _gl_alpha,
        FamilyKind.CARLITZ: _carlitz_alpha,
        FamilyKind.SIGMA: _sigma_alpha,
        FamilyKind.SIGMA_STAR: _sigma_star_alpha(alternating),
        FamilyKind.KONTSEVICH: _kontsevich_alpha,
    }
    return IndVarietySpec(kind.value, rules[kind])


def gl_count(m: int, q: int) -> int:
    """#GL_m(F_q) по формуле произведения."""
    out = q ** (m * (m - 1) // 2)
    for i in range(1, m + 1):
        out *= q**i - 1
    return out


