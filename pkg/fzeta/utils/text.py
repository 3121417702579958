"""
Утилиты для текстовых форматов.

Этот модуль содержит разбор и вывод многочленов в формате командной строки:
разреженный "k:c;k:c" (показатели могут быть отрицательными у многочленов Лорана)
или плотный "c0,c1,...", а также наборов целых "1,3-5,10" и матриц "a,b;c,d".
"""

from __future__ import annotations
import re
from typing import Dict, List, Optional, Tuple, Union

from fzeta.core.exceptions import ParseError, PolynomialError
from fzeta.exactpoly.laurent import LaurentPoly
from fzeta.exactpoly.poly import IntPoly

_RANGE_RE = re.compile(r"^(-?\d+)-(-?\d+)$")


def _to_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"Некорректное целое {what}: {token!r}") from e


def _parse_terms(text: str) -> Dict[int, int]:
    s = text.replace(" ", "")
    if not s:
        raise ParseError("Пустая запись многочлена")

    terms: Dict[int, int] = {}
    if ":" in s:
        for part in s.split(";"):
            if not part:
                continue
            if part.count(":") != 1:
                raise ParseError(f"Ожидалась пара 'k:c', получено {part!r}")
            k_raw, c_raw = part.split(":")
            k = _to_int(k_raw, "показатель")
            terms[k] = terms.get(k, 0) + _to_int(c_raw, "коэффициент")
        return terms

    for k, token in enumerate(s.split(",")):
        c = _to_int(token, "коэффициент")
        if c:
            terms[k] = c
    return terms


def parse_laurent(text: str) -> LaurentPoly:
    """
    Разбирает многочлен Лорана.

    Args:
        text: "k:c;..." или "c0,c1,..."

    Returns:
        LaurentPoly

    Raises:
        ParseError: При синтаксической ошибке
    """
    return LaurentPoly.from_dict(_parse_terms(text))


def parse_poly(text: str) -> IntPoly:
    """
    Разбирает многочлен с неотрицательными показателями.

    Raises:
        ParseError: При синтаксической ошибке или отрицательном показателе
    """
    try:
        return IntPoly.from_dict({k: c for k, c in _parse_terms(text).items() if c})
    except PolynomialError as e:
        raise ParseError(str(e)) from e


def format_poly(p: Union[IntPoly, LaurentPoly]) -> str:
    """
    Каноническая разреженная запись "k:c;..." по возрастанию показателя.

    Нуль записывается как "0".
    """
    terms = list(p.terms())
    if not terms:
        return "0"
    return ";".join(f"{k}:{c}" for k, c in terms)


def parse_int_set(spec: str, lo: int = 1, hi: Optional[int] = None) -> List[int]:
    """
    Парсит набор целых вида "1,3-5,10".

    Args:
        spec: Спецификация набора
        lo: Минимальное допустимое значение
        hi: Максимальное допустимое значение (None — без ограничения)

    Returns:
        Отсортированный список без повторов

    Raises:
        ParseError: При некорректной записи или значении вне [lo, hi]
    """
    out: set[int] = set()

    if not spec:
        return []

    for part in spec.replace(" ", "").split(","):
        if not part:
            continue

        m = _RANGE_RE.match(part)
        if m:
            first, last = int(m.group(1)), int(m.group(2))
            if first > last:
                first, last = last, first
            values = range(first, last + 1)
        else:
            v = _to_int(part, "в наборе")
            values = range(v, v + 1)

        for v in values:
            if v < lo or (hi is not None and v > hi):
                upper = hi if hi is not None else "∞"
                raise ParseError(f"Значение {v} вне диапазона [{lo}, {upper}]")
            out.add(v)

    return sorted(out)


def parse_int_matrix(spec: str) -> Tuple[Tuple[int, ...], ...]:
    """
    Парсит квадратную целочисленную матрицу "a,b;c,d".

    Raises:
        ParseError: Если строки разной длины или матрица не квадратная
    """
    rows = [r for r in spec.replace(" ", "").split(";") if r]
    if not rows:
        raise ParseError("Пустая матрица")
    matrix = tuple(tuple(_to_int(x, "в матрице") for x in row.split(",")) for row in rows)
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ParseError(f"Матрица {spec!r} не квадратная")
    return matrix
