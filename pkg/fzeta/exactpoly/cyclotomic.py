"""
Круговые многочлены, корни из единицы и кольца Z[ζ_n].

Этот модуль содержит потокобезопасный кэш Φ_n, тип RootOfUnity и вычеты
CyclotomicInt по модулю Φ_n. Вычет записан через x = exp(2πi/n);
корень ζ = x^k получается подстановкой до редукции.
"""

from __future__ import annotations
import cmath
import logging
import threading
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Union

from fzeta.core.config import CYCLOTOMIC_CACHE_LIMIT
from fzeta.core.exceptions import PolynomialError
from fzeta.exactpoly.poly import IntPoly, divrem_unit, exact_div

_CACHE: Dict[int, IntPoly] = {}
_CACHE_LOCK = threading.Lock()


def _divisors(n: int) -> List[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def cyclotomic(n: int) -> IntPoly:
    """
    Круговой многочлен Φ_n.

    Φ_n = (qⁿ − 1) / Π_{d | n, d < n} Φ_d; результаты до CYCLOTOMIC_CACHE_LIMIT
    запоминаются.

    Args:
        n: Порядок (n >= 1)

    Returns:
        Φ_n с целыми коэффициентами

    Raises:
        PolynomialError: Если n < 1
    """
    if n < 1:
        raise PolynomialError(f"Φ_n определён для n >= 1, получено {n}")
    with _CACHE_LOCK:
        cached = _CACHE.get(n)
    if cached is not None:
        return cached

    poly = IntPoly.monomial(n) - 1
    for d in _divisors(n):
        if d < n:
            poly = exact_div(poly, cyclotomic(d))

    if n <= CYCLOTOMIC_CACHE_LIMIT:
        with _CACHE_LOCK:
            _CACHE.setdefault(n, poly)
        logging.debug(f"[cyclotomic] Φ_{n} вычислен, степень {poly.degree}")
    return poly


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@dataclass(frozen=True)
class RootOfUnity:
    """
    Примитивный корень ζ = exp(2πi·k/n).

    Attributes:
        order: n >= 1
        numer: k, 1 <= k <= n, gcd(k, n) = 1
    """

    order: int
    numer: int = 1

    def __post_init__(self) -> None:
        if self.order < 1:
            raise PolynomialError(f"Порядок корня из единицы должен быть >= 1: {self.order}")
        if not 1 <= self.numer <= self.order or gcd(self.numer, self.order) != 1:
            raise PolynomialError(
                f"k={self.numer} не задаёт примитивный корень порядка {self.order}"
            )

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.numer / self.order)

    def as_cyclotomic(self) -> "CyclotomicInt":
        return eval_root(IntPoly.q(), self)


@dataclass(frozen=True)
class CyclotomicInt:
    """
    Элемент Z[ζ_n], записанный вычетом по модулю Φ_n(x).

    Attributes:
        order: n
        residue: Многочлен от x степени < φ(n)
    """

    order: int
    residue: IntPoly

    def __post_init__(self) -> None:
        phi = cyclotomic(self.order)
        if self.residue.degree >= phi.degree:
            object.__setattr__(self, "residue", divrem_unit(self.residue, phi)[1])

    @classmethod
    def from_int(cls, order: int, value: int) -> "CyclotomicInt":
        return cls(order, IntPoly.constant(value))

    @property
    def is_zero(self) -> bool:
        return self.residue.is_zero

    def _same(self, other: "CyclotomicInt") -> None:
        if self.order != other.order:
            raise PolynomialError(
                f"Элементы Z[ζ_{self.order}] и Z[ζ_{other.order}] несовместимы"
            )

    def __add__(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.order, other)
        self._same(other)
        return CyclotomicInt(self.order, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.order, -self.residue)

    def __sub__(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.order, other)
        return self + (-other)

    def __mul__(self, other: Union["CyclotomicInt", int]) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt(self.order, self.residue * other)
        self._same(other)
        return CyclotomicInt(self.order, self.residue * other.residue)

    __rmul__ = __mul__

    def to_complex(self) -> complex:
        x = cmath.exp(2j * cmath.pi / self.order)
        return sum((c * x**k for k, c in self.residue.terms()), 0j)

    def __str__(self) -> str:
        return self.residue.to_str(f"ζ{self.order}")


def eval_root(p: IntPoly, z: RootOfUnity) -> CyclotomicInt:
    """
    Значение p(ζ) в Z[ζ_n].

    Показатели сначала сводятся по модулю n (xⁿ = 1), затем остаток
    делится на Φ_n.

    Args:
        p: Многочлен
        z: Примитивный корень из единицы

    Returns:
        Вычет p(x^k) mod Φ_n(x)
    """
    n, k = z.order, z.numer
    folded = [0] * n
    for e, c in p.terms():
        folded[(e * k) % n] += c
    return CyclotomicInt(n, IntPoly(tuple(folded)))
