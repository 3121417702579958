"""
Перебор над простыми полями: независимая проверка считающих формул.

Этот модуль содержит подсчёт GL_m(F_p), решений XᵀAX = A, точек Pⁿ и Gr(n, j).
Каждый подсчёт проверяет бюджет перебора до начала работы.
"""

from __future__ import annotations
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product
from math import comb
from typing import List, Sequence, Tuple

from fzeta.core.config import ORACLE_BUDGET
from fzeta.core.exceptions import OracleBudgetError, OracleInputError
from fzeta.fforacle.field import MatrixFp, PrimeField, echelon_insert, reduce_against


def _check_budget(what: str, candidates: int) -> None:
    if candidates > ORACLE_BUDGET:
        raise OracleBudgetError(
            f"{what}: {candidates} кандидатов превышает бюджет {ORACLE_BUDGET}"
        )


def _count_completions(
    prefix_basis: List[Tuple[int, List[int]]],
    rows: Sequence[Tuple[int, ...]],
    depth: int,
    m: int,
    p: int,
) -> int:
    total = 0
    for row in rows:
        entry = echelon_insert(reduce_against(row, prefix_basis, p), p)
        if entry is None:
            continue
        if depth == m - 1:
            total += 1
        else:
            total += _count_completions(prefix_basis + [entry], rows, depth + 1, m, p)
    return total


def _count_gl_from_first_row(args: Tuple[Tuple[int, ...], int, int]) -> int:
    first, m, p = args
    entry = echelon_insert(list(first), p)
    if entry is None:
        return 0
    if m == 1:
        return 1
    rows = list(product(range(p), repeat=m))
    return _count_completions([entry], rows, 1, m, p)


def count_gl(m: int, p: int, workers: int = 1, prune: bool = True) -> int:
    """
    Число обратимых матриц m×m над F_p.

    Матрицы перебираются по строкам; префикс из линейно зависимых строк
    отсекает все свои продолжения (они вырождены).

    Args:
        m: Размер
        p: Простое число
        workers: Число процессов (разбиение по первой строке)
        prune: False — проверить каждую из p^{m²} матриц по отдельности

    Returns:
        #GL_m(F_p)

    Raises:
        OracleBudgetError: Если p^{m²} больше бюджета
    """
    PrimeField(p)
    if m < 0:
        raise OracleInputError(f"Размер матрицы должен быть >= 0, получено {m}")
    _check_budget(f"GL_{m}(F_{p})", p ** (m * m))
    if m == 0:
        return 1

    if not prune:
        return sum(
            1
            for entries in product(range(p), repeat=m * m)
            if MatrixFp.from_flat(p, entries, m, m).is_invertible()
        )

    tasks = [(first, m, p) for first in product(range(p), repeat=m)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(_count_gl_from_first_row, tasks))
    else:
        total = sum(_count_gl_from_first_row(t) for t in tasks)
    logging.info(f"[oracle] #GL_{m}(F_{p}) = {total}")
    return total


def count_matrix_equation(A: Sequence[Sequence[int]], p: int) -> int:
    """
    Число матриц X с XᵀAX = A над F_p.

    Args:
        A: Невырожденная квадратная матрица (элементы приводятся по модулю p)
        p: Простое число

    Returns:
        Число решений

    Raises:
        OracleInputError: Если A вырождена над F_p
        OracleBudgetError: Если p^{n²} больше бюджета
    """
    target = MatrixFp(p, tuple(tuple(r) for r in A))
    n, cols = target.shape
    if n != cols or not target.is_invertible():
        raise OracleInputError(f"Матрица A вырождена над F_{p} или не квадратная")
    _check_budget(f"XᵀAX = A над F_{p}", p ** (n * n))

    count = 0
    for entries in product(range(p), repeat=n * n):
        X = MatrixFp.from_flat(p, entries, n, n)
        if X.transpose() @ target @ X == target:
            count += 1
    logging.info(f"[oracle] XᵀAX = A над F_{p}: {count}")
    return count


def count_projective(n: int, p: int) -> int:
    """#Pⁿ(F_p): ненулевые векторы F_p^{n+1} с первой ненулевой координатой 1."""
    PrimeField(p)
    _check_budget(f"P^{n}(F_{p})", p ** (n + 1))
    count = 0
    for v in product(range(p), repeat=n + 1):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            count += 1
    return count


def count_grassmannian(n: int, j: int, p: int) -> int:
    """
    #Gr(n, j)(F_p): приведённые ступенчатые матрицы j×n ранга j.

    Для каждого набора ведущих столбцов перебираются все свободные элементы.

    Raises:
        OracleBudgetError: Если C(n, j)·p^{j(n−j)} больше бюджета
    """
    PrimeField(p)
    if j < 0 or j > n:
        return 0
    _check_budget(f"Gr({n},{j})(F_{p})", comb(n, j) * p ** (j * (n - j)))
    if j == 0:
        return 1

    count = 0
    for pivots in combinations(range(n), j):
        free = [
            (i, c)
            for i, piv in enumerate(pivots)
            for c in range(piv + 1, n)
            if c not in pivots
        ]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(j)]
            for i, piv in enumerate(pivots):
                rows[i][piv] = 1
            for (i, c), x in zip(free, values):
                rows[i][c] = x
            M = MatrixFp(p, tuple(tuple(r) for r in rows))
            if M.is_rref() and M.rank() == j:
                count += 1
    return count
