"""
Инд-многообразия 𝒳_N = ⋃_{m<N} X_m × (A^m ∖ 0) × ··· × (A¹ ∖ 0) и их условия.

Этот модуль содержит IndVarietySpec и проверки F₁- и F_ζ-условий для
усечений, а также конструктивной торификации по группам слагаемых.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Union

from fzeta.core.config import DEFAULT_EVAL_POINT_CONVENTION
from fzeta.core.exceptions import PolynomialError
from fzeta.core.models import ConditionReport
from fzeta.core.types import ConditionId, EvalPointConvention, Sign, Verdict
from fzeta.exactpoly.poly import IntPoly
from fzeta.exactpoly.qanalog import pochhammer
from fzeta.grothendieck.classes import GrothClass, to_torus_basis
from fzeta.habiro.ring import HabiroElement, make
from fzeta.utils.json_helpers import int_map_to_json

AlphaRule = Callable[[int], IntPoly]


@dataclass(frozen=True)
class IndVarietySpec:
    """
    Описание инд-многообразия через классы α_m = [X_m].

    Attributes:
        name: Имя для отчётов
        rule: Функция m -> α_m
    """

    name: str
    rule: AlphaRule

    @classmethod
    def from_list(cls, name: str, alphas: Sequence[IntPoly]) -> "IndVarietySpec":
        """α_m из списка; за его пределами α_m = 0."""
        frozen = tuple(alphas)
        return cls(name, lambda m: frozen[m] if m < len(frozen) else IntPoly.zero())

    def alpha(self, m: int) -> IntPoly:
        value = self.rule(m)
        if not isinstance(value, IntPoly):
            kind = type(value).__name__
            raise PolynomialError(f"{self.name}: α_{m} должен быть IntPoly, получено {kind}")
        return value

    def partial_sum(self, n: int) -> IntPoly:
        """N_{𝒳_n}(q) = Σ_{m<n} α_m(q)(q)_m."""
        out = IntPoly.zero()
        for m in range(n):
            out = out + self.alpha(m) * pochhammer(m)
        return out

    def habiro_element(self, level: int) -> HabiroElement:
        """Слагаемые с m >= level лежат в ((q)_level)."""
        return make(level, self.partial_sum(level))


def check_ind_f1(spec: IndVarietySpec, N: int) -> ConditionReport:
    """
    F₁-структура усечения 𝒳_N: каждый α_m (m < N) неотрицателен в базисе T.

    Args:
        spec: Описание инд-многообразия
        N: Число слагаемых

    Returns:
        ConditionReport с торификациями по m
    """
    per_m: Dict[str, Dict[str, str]] = {}
    for m in range(N):
        torus = to_torus_basis(spec.alpha(m))
        for k, a in sorted(torus.items()):
            if a < 0:
                return ConditionReport(
                    condition=ConditionId.IND_F1,
                    verdict=Verdict.FAILS,
                    witness={"m": m, "k": k, "coefficient": a},
                    details={"name": spec.name},
                )
        per_m[str(m)] = int_map_to_json(torus)
    return ConditionReport(
        condition=ConditionId.IND_F1,
        verdict=Verdict.HOLDS,
        certificate={"torifications": per_m},
        details={"name": spec.name, "N": N},
    )


def check_ind_fzeta(
    spec: IndVarietySpec,
    n: int,
    convention: Union[EvalPointConvention, str, None] = None,
) -> ConditionReport:
    """
    Условие F_ζ для ζ порядка n: N_{𝒳_n}(x) >= 0 в выбранной точке.

    Вердикт определяется только знаком значения; F₁-часть условия
    (check_ind_f1 до n) приводится в details.

    Args:
        spec: Описание инд-многообразия
        n: Порядок корня из единицы (n >= 1)
        convention: Точка вычисления: 1 − n (по умолчанию) или −n

    Returns:
        ConditionReport со значениями в обеих точках
    """
    if n < 1:
        raise PolynomialError(f"Порядок корня из единицы должен быть >= 1, получено {n}")
    conv = EvalPointConvention(convention or DEFAULT_EVAL_POINT_CONVENTION)
    other = (
        EvalPointConvention.MINUS_N
        if conv is EvalPointConvention.ONE_MINUS_N
        else EvalPointConvention.ONE_MINUS_N
    )

    poly = spec.partial_sum(n)
    x = conv.point(n)
    value = poly.eval_int(x)
    alt_value = poly.eval_int(other.point(n))
    f1 = check_ind_f1(spec, n)
    logging.debug(f"[ind-fzeta] {spec.name}, n={n}: N({x}) = {value}")

    details = {
        "name": spec.name,
        "n": n,
        "convention": conv.value,
        "eval_point": x,
        "value": str(value),
        "sign": Sign.of(value).value,
        "alternate_convention": other.value,
        "alternate_value": str(alt_value),
        "f1_structure": f1.verdict.value,
    }
    if value < 0:
        return ConditionReport(
            condition=ConditionId.IND_FZETA,
            verdict=Verdict.FAILS,
            witness={"eval_point": x, "value": str(value)},
            details=details,
        )
    return ConditionReport(condition=ConditionId.IND_FZETA, verdict=Verdict.HOLDS, details=details)


def check_constructible_f1(
    groups: Sequence[Sequence[Union[GrothClass, IntPoly]]],
    labels: Optional[Sequence[str]] = None,
) -> ConditionReport:
    """
    Конструктивная торификация: суммарный класс каждой группы неотрицателен в базисе T,
    даже если отдельные слагаемые таковыми не являются.

    Args:
        groups: Группы классов-слагаемых
        labels: Имена групп для отчёта

    Returns:
        ConditionReport с разложением каждой группы
    """
    names: List[str] = list(labels) if labels else [str(i) for i in range(len(groups))]
    expansions: Dict[str, Dict[str, str]] = {}
    first_bad = None
    for name, group in zip(names, groups):
        total = GrothClass()
        for c in group:
            total = total + GrothClass.coerce(c)
        torus = to_torus_basis(total)
        expansions[name] = int_map_to_json(torus)
        negatives = sorted(k for k, a in torus.items() if a < 0)
        if negatives and first_bad is None:
            k = negatives[0]
            first_bad = {"group": name, "k": k, "coefficient": torus[k]}

    if first_bad is not None:
        return ConditionReport(
            condition=ConditionId.CONSTRUCTIBLE_F1,
            verdict=Verdict.FAILS,
            witness=first_bad,
            details={"expansions": expansions},
        )
    return ConditionReport(
        condition=ConditionId.CONSTRUCTIBLE_F1,
        verdict=Verdict.HOLDS,
        certificate={"expansions": expansions},
    )
