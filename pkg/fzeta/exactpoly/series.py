"""
Усечённые степенные ряды над Z.

Этот модуль содержит PowerSeriesTrunc: ряд по модулю q^{order+1}.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from fzeta.core.exceptions import PolynomialError
from fzeta.exactpoly.poly import IntPoly


def _fit(coeffs: Sequence[int], order: int) -> Tuple[int, ...]:
    out = [int(c) for c in coeffs[: order + 1]]
    out.extend([0] * (order + 1 - len(out)))
    return tuple(out)


@dataclass(frozen=True)
class PowerSeriesTrunc:
    """
    Ряд c_0 + c_1 q + ... + c_order q^order + O(q^{order+1}).

    Attributes:
        order: Максимальная хранимая степень
        coeffs: Ровно order + 1 коэффициентов
    """

    order: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise PolynomialError(f"Порядок ряда должен быть >= 0, получено {self.order}")
        object.__setattr__(self, "coeffs", _fit(self.coeffs, self.order))

    @classmethod
    def from_poly(cls, p: IntPoly, order: int) -> "PowerSeriesTrunc":
        return cls(order, p.coeffs)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def truncate(self, order: int) -> "PowerSeriesTrunc":
        if order > self.order:
            raise PolynomialError(f"Нельзя повысить точность ряда с {self.order} до {order}")
        return PowerSeriesTrunc(order, self.coeffs)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __add__(self, other: "PowerSeriesTrunc") -> "PowerSeriesTrunc":
        return series_add(self, other)

    def __sub__(self, other: "PowerSeriesTrunc") -> "PowerSeriesTrunc":
        return series_add(self, -other)

    def __neg__(self) -> "PowerSeriesTrunc":
        return PowerSeriesTrunc(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "PowerSeriesTrunc") -> "PowerSeriesTrunc":
        return series_mul(self, other)

    def __str__(self) -> str:
        return f"{self.to_poly()} + O(q^{self.order + 1})"


def series_add(a: PowerSeriesTrunc, b: PowerSeriesTrunc) -> PowerSeriesTrunc:
    """Сумма с точностью min(order)."""
    order = min(a.order, b.order)
    return PowerSeriesTrunc(order, tuple(a.coeffs[k] + b.coeffs[k] for k in range(order + 1)))


def series_mul(a: PowerSeriesTrunc, b: PowerSeriesTrunc) -> PowerSeriesTrunc:
    """Произведение с точностью min(order)."""
    order = min(a.order, b.order)
    out: List[int] = [0] * (order + 1)
    for i in range(order + 1):
        x = a.coeffs[i]
        if x == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return PowerSeriesTrunc(order, tuple(out))


def series_inverse(a: PowerSeriesTrunc) -> PowerSeriesTrunc:
    """
    Обратный ряд.

    Raises:
        PolynomialError: Если свободный член не ±1
    """
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise PolynomialError(f"Свободный член {c0} необратим в Z[[q]]")
    out = [0] * (a.order + 1)
    out[0] = c0
    for k in range(1, a.order + 1):
        acc = 0
        for j in range(1, k + 1):
            acc += a.coeffs[j] * out[k - j]
        out[k] = -c0 * acc
    return PowerSeriesTrunc(a.order, tuple(out))
