"""
Кастомные исключения для fzeta.

Этот модуль содержит специфичные для приложения исключения.
Отрицательный вердикт проверки условия исключением не является.
"""

from typing import Dict, Optional


class FZetaError(Exception):
    """Базовое исключение для всех ошибок fzeta."""

    pass


class ParseError(FZetaError):
    """Ошибка разбора текстового представления (многочлен, диапазон, матрица)."""

    pass


class PolynomialError(FZetaError):
    """Недопустимая операция над многочленом (деление на неединичный старший коэффициент и т.п.)."""

    pass


class TruncationLevelError(FZetaError):
    """Уровень усечения элемента Хабиро недостаточен для запрошенной операции."""

    pass


class LevelMismatchError(FZetaError):
    """Операция над элементами Хабиро разных уровней без явной проекции."""

    pass


class SplitError(FZetaError):
    """Некорректное разбиение N(q) = b(q) + (qⁿ − 1)p(q)."""

    pass


class TateRootError(FZetaError):
    """Невозможно перенести F₁-структуру на класс с корнями Тейта."""

    def __init__(self, message: str, witness: Optional[Dict[str, int]] = None) -> None:
        super().__init__(message)
        self.witness = witness or {}


class OracleBudgetError(FZetaError):
    """Перебор над конечным полем превышает заданный бюджет."""

    pass


class OracleInputError(FZetaError):
    """Некорректный вход оракула (не простое p, вырожденная матрица)."""

    pass


class VerificationError(FZetaError):
    """Внутренняя перекрёстная проверка не сошлась (ошибка реализации)."""

    pass
