"""
Утилиты для работы с JSON.

Этот модуль содержит функции детерминированной сериализации отчётов.
Большие целые числа выводятся десятичными строками.
"""

from __future__ import annotations
import json
import sys
from typing import Any, Iterable

# Граница точного представления целых в JSON-потребителях на double
SAFE_INT_LIMIT = 2**53 - 1

VOLATILE_KEYS = ("timestamp", "wall_ms")


def allow_long_int_strings() -> None:
    """
    Снимает ограничение CPython на длину десятичной записи int (3.10.7+).

    Значения частичных сумм при n около 40 содержат тысячи цифр.
    """
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def stringify_big_ints(obj: Any) -> Any:
    """
    Рекурсивно заменяет целые вне диапазона ±(2^53 − 1) на десятичные строки.

    Структурные поля (n, уровни, показатели, счётчики) остаются числами, пока
    помещаются в double без потерь; алгебраические значения модели и отчёты
    записывают строками сами.

    Args:
        obj: Произвольная JSON-совместимая структура

    Returns:
        Структура той же формы
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT_LIMIT else obj
    if isinstance(obj, dict):
        return {str(k): stringify_big_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify_big_ints(v) for v in obj]
    return obj


def int_map_to_json(mapping: dict) -> dict:
    """Словарь {показатель: коэффициент} с ключами и значениями-строками."""
    return {str(k): str(v) for k, v in sorted(mapping.items())}


def dumps_canonical(obj: Any, indent: int = 2) -> str:
    """
    Сериализует структуру детерминированно (отсортированные ключи).

    Args:
        obj: JSON-совместимая структура
        indent: Отступ

    Returns:
        JSON строка
    """
    return json.dumps(
        stringify_big_ints(obj), sort_keys=True, ensure_ascii=False, indent=indent
    )


def strip_volatile(obj: Any, keys: Iterable[str] = VOLATILE_KEYS) -> Any:
    """
    Удаляет изменчивые поля (время запуска, длительности) для побайтового сравнения.

    Args:
        obj: Разобранный JSON
        keys: Имена удаляемых ключей

    Returns:
        Копия без указанных ключей
    """
    drop = set(keys)
    if isinstance(obj, dict):
        return {k: strip_volatile(v, drop) for k, v in obj.items() if k not in drop}
    if isinstance(obj, list):
        return [strip_volatile(v, drop) for v in obj]
    return obj
