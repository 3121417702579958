"""
Таблицы знаков частичных сумм семейств в точках 1 − n (или −n).

Этот модуль содержит основные и дополнительные утверждения о знаке,
построение таблиц и сопутствующие отчёты: сравнение двух точек вычисления
и сверку опорных числовых значений.
"""

from __future__ import annotations
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Union

from fzeta.core.config import DEFAULT_EVAL_POINT_CONVENTION, DEFAULT_THREADS
from fzeta.core.models import SignTableRow
from fzeta.core.types import Claim, EvalPointConvention, FamilyKind, Sign
from fzeta.families.generators import FamilySpec, partial_sums


def primary_claim(kind: FamilyKind, n: int) -> Claim:
    """Основное утверждение о знаке; его нарушение проваливает проверку."""
    if kind is FamilyKind.GL:
        return Claim.NONNEGATIVE if n % 2 else Claim.UNCLAIMED
    if kind is FamilyKind.CARLITZ:
        return Claim.NONNEGATIVE if n % 2 or n % 4 == 2 else Claim.UNCLAIMED
    if kind is FamilyKind.SIGMA:
        return Claim.NONNEGATIVE if n == 1 or n % 4 in (0, 3) else Claim.UNCLAIMED
    if kind is FamilyKind.SIGMA_STAR:
        return Claim.NONNEGATIVE if n % 4 == 0 else Claim.UNCLAIMED
    return Claim.UNCLAIMED


def secondary_claim(kind: FamilyKind, n: int) -> Claim:
    """Дополнительное утверждение о знаке, проверяется отдельно."""
    if kind is FamilyKind.GL:
        return Claim.NEGATIVE if n % 2 == 0 else Claim.UNCLAIMED
    if kind is FamilyKind.CARLITZ:
        return Claim.NEGATIVE if n % 4 == 0 else Claim.UNCLAIMED
    if kind is FamilyKind.SIGMA:
        return Claim.NEGATIVE if n != 1 and n % 4 in (1, 2) else Claim.UNCLAIMED
    if kind is FamilyKind.SIGMA_STAR:
        return Claim.NEGATIVE if n >= 2 and n % 4 != 0 else Claim.UNCLAIMED
    return Claim.UNCLAIMED


def sign_table(
    spec: FamilySpec,
    n_values: Sequence[int],
    convention: Union[EvalPointConvention, str, None] = None,
    threads: Optional[int] = None,
) -> List[SignTableRow]:
    """
    Таблица знаков частичных сумм.

    Частичные суммы строятся один раз до максимальной отсечки;
    строки вычисляются независимо и выдаются в порядке n_values.

    Args:
        spec: Семейство и отсечки
        n_values: Порядки n >= 1
        convention: Точка вычисления (1 − n по умолчанию)
        threads: Число потоков для вычисления строк

    Returns:
        Список SignTableRow
    """
    if not n_values:
        return []
    conv = EvalPointConvention(convention or DEFAULT_EVAL_POINT_CONVENTION)
    cutoffs = {n: spec.sign_cutoff(n) for n in n_values}
    sums = partial_sums(spec, max(cutoffs.values()))

    def build(n: int) -> SignTableRow:
        x = conv.point(n)
        value = sums[cutoffs[n]].eval_int(x)
        return SignTableRow.build(
            family=spec.kind,
            n=n,
            cutoff=cutoffs[n],
            eval_point=x,
            value=value,
            claimed=primary_claim(spec.kind, n),
            secondary=secondary_claim(spec.kind, n),
        )

    workers = threads if threads is not None else DEFAULT_THREADS
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(build, n_values))
    else:
        rows = [build(n) for n in n_values]

    logging.info(f"[signs] {spec.kind.value}: {len(rows)} строк, точка {conv.value}")
    return rows


def primary_mismatches(rows: Sequence[SignTableRow]) -> List[int]:
    return [r.n for r in rows if r.match is False]


def secondary_mismatches(rows: Sequence[SignTableRow]) -> List[int]:
    return [r.n for r in rows if r.secondary_match is False]


def condition62_dual_report(spec: FamilySpec, n_values: Sequence[int]) -> List[Dict[str, Any]]:
    """Значения частичных сумм в точках 1 − n и −n рядом."""
    if not n_values:
        return []
    cutoffs = {n: spec.sign_cutoff(n) for n in n_values}
    sums = partial_sums(spec, max(cutoffs.values()))
    out = []
    for n in n_values:
        p = sums[cutoffs[n]]
        a, b = p.eval_int(1 - n), p.eval_int(-n)
        out.append(
            {
                "family": spec.kind.value,
                "n": n,
                "value_one_minus_n": str(a),
                "sign_one_minus_n": Sign.of(a).value,
                "value_minus_n": str(b),
                "sign_minus_n": Sign.of(b).value,
                "signs_agree": Sign.of(a) is Sign.of(b),
            }
        )
    return out


@dataclass(frozen=True)
class NumericAside:
    """
    Опорное числовое значение частичной суммы.

    Attributes:
        kind: Семейство
        n: Порядок
        stated: Опорное значение
        description: Что именно вычислялось
        alternating: Соглашение о знаке σ* для сравнения
        skip_leading: Не учитывать слагаемое с индексом 0
    """

    kind: FamilyKind
    n: int
    stated: int
    description: str
    alternating: bool = True
    skip_leading: bool = False

    def computed(self) -> int:
        spec = FamilySpec(self.kind, alternating=self.alternating)
        cutoff = spec.sign_cutoff(self.n)
        sums = partial_sums(spec, cutoff)
        value = sums[cutoff].eval_int(1 - self.n)
        if self.skip_leading:
            value -= sums[0].eval_int(1 - self.n)
        return value


NUMERIC_ASIDES = (
    NumericAside(FamilyKind.GL, 1, 0, "sum of terms m >= 1 at n=1", skip_leading=True),
    NumericAside(FamilyKind.SIGMA, 1, 2, "sigma(1-n) at n=1"),
    NumericAside(FamilyKind.SIGMA, 2, -2, "sigma(1-n) at n=2"),
    NumericAside(FamilyKind.SIGMA_STAR, 1, 0, "sigma*(1-n) at n=1, displayed signs"),
    NumericAside(FamilyKind.SIGMA_STAR, 2, -2, "sigma*(1-n) at n=2, displayed signs"),
    NumericAside(
        FamilyKind.SIGMA_STAR, 2, -2, "sigma*(1-n) at n=2, unsigned terms", alternating=False
    ),
)


def numeric_aside_report() -> List[Dict[str, Any]]:
    """Сравнение опорных значений с вычисленными."""
    out = []
    for aside in NUMERIC_ASIDES:
        value = aside.computed()
        out.append(
            {
                "family": aside.kind.value,
                "n": aside.n,
                "description": aside.description,
                "stated": aside.stated,
                "computed": value,
                "agrees": value == aside.stated,
            }
        )
    return out
