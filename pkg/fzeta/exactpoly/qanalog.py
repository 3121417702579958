"""
q-аналоги: [n]_q, [n]_q!, q-биномиальные коэффициенты и символы Похгаммера.
"""

from __future__ import annotations
from functools import lru_cache

from fzeta.core.exceptions import PolynomialError
from fzeta.exactpoly.poly import IntPoly, exact_div


def q_int(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^{n−1}; [0]_q = 0."""
    if n < 0:
        raise PolynomialError(f"[n]_q определено для n >= 0, получено {n}")
    return IntPoly((1,) * n)


@lru_cache(maxsize=256)
def q_factorial(n: int) -> IntPoly:
    if n < 0:
        raise PolynomialError(f"[n]_q! определено для n >= 0, получено {n}")
    if n == 0:
        return IntPoly.one()
    return q_factorial(n - 1) * q_int(n)


def q_binomial(n: int, j: int) -> IntPoly:
    """
    Гауссов биномиальный коэффициент [n, j]_q.

    Raises:
        PolynomialError: Если n < 0, j < 0 или j > n
    """
    if n < 0 or j < 0 or j > n:
        raise PolynomialError(f"[n, j]_q требует 0 <= j <= n, получено n={n}, j={j}")
    return exact_div(q_factorial(n), q_factorial(j) * q_factorial(n - j))


@lru_cache(maxsize=256)
def pochhammer(n: int) -> IntPoly:
    """(q)_n = (q − 1)(q² − 1)···(qⁿ − 1)."""
    if n < 0:
        raise PolynomialError(f"(q)_n определено для n >= 0, получено {n}")
    if n == 0:
        return IntPoly.one()
    return pochhammer(n - 1).times_q_power_minus_one(n)


def pochhammer_one_minus(n: int) -> IntPoly:
    """(1 − q)(1 − q²)···(1 − qⁿ)."""
    p = pochhammer(n)
    return -p if n % 2 else p
