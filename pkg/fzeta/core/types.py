"""
Типы и перечисления для fzeta.

Этот модуль содержит перечисления и вспомогательные функции для работы с типами.
"""

from __future__ import annotations
from enum import Enum
from typing import Optional


class Verdict(str, Enum):
    """Исход проверки условия."""

    HOLDS = "holds"
    FAILS = "fails"
    UNDETERMINED = "undetermined"


class ConditionId(str, Enum):
    """Проверяемые условия структуры над F₁ / F_ζ."""

    COUNTING_F1 = "counting-f1"
    MOTIVIC_F1 = "motivic-f1"
    EVAL_FZETA = "eval-fzeta"
    PARTIAL_EVAL = "partial-eval"
    INTERP_POSITIVITY = "interp-positivity"
    DUAL_TORIFICATION = "dual-torification"
    IND_F1 = "ind-f1"
    IND_FZETA = "ind-fzeta"
    CONSTRUCTIBLE_F1 = "constructible-f1"


class EvalPointConvention(str, Enum):
    """Выбор точки вычисления для условия F_ζ при ζ порядка n."""

    ONE_MINUS_N = "one-minus-n"
    MINUS_N = "minus-n"

    def point(self, n: int) -> int:
        """
        Возвращает целую точку вычисления для порядка n.

        Args:
            n: Порядок корня из единицы (n >= 1)

        Returns:
            1 − n или −n в зависимости от соглашения
        """
        if self is EvalPointConvention.ONE_MINUS_N:
            return 1 - n
        return -n


class FamilyKind(str, Enum):
    """Семейства рядов, для которых строятся таблицы знаков."""

    GL = "gl"
    CARLITZ = "carlitz"
    SIGMA = "sigma"
    SIGMA_STAR = "sigma-star"
    KONTSEVICH = "kontsevich"


class Sign(str, Enum):
    """Знак целого числа."""

    POSITIVE = "+"
    ZERO = "0"
    NEGATIVE = "-"

    @classmethod
    def of(cls, value: int) -> "Sign":
        if value > 0:
            return cls.POSITIVE
        if value < 0:
            return cls.NEGATIVE
        return cls.ZERO


class Claim(str, Enum):
    """Утверждённый знак значения в строке таблицы знаков."""

    NONNEGATIVE = ">=0"
    NEGATIVE = "<0"
    UNCLAIMED = "unclaimed"

    def matches(self, value: int) -> Optional[bool]:
        """
        Сверяет значение с утверждением.

        Returns:
            None для UNCLAIMED, иначе результат сравнения
        """
        if self is Claim.NONNEGATIVE:
            return value >= 0
        if self is Claim.NEGATIVE:
            return value < 0
        return None
