"""
Классы с корнями Тейта: многочлены от t, где tⁿ = L.

Этот модуль содержит TateRootClass (показатель k при порядке n означает L^{k/n}),
перенос F₁-структуры на корни Тейта, редукцию по модулю t^m − 1 (орбитные
категории) и действие Q₊ заменой L -> L^r.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple, Union

from fzeta.core.exceptions import TateRootError
from fzeta.exactpoly.laurent import LaurentPoly
from fzeta.exactpoly.poly import IntPoly
from fzeta.grothendieck.classes import CellDecomposition, GrothClass
from fzeta.habiro.indvariety import IndVarietySpec
from fzeta.utils.text import format_poly


def _scale_exponents(value: LaurentPoly, factor: int) -> LaurentPoly:
    return LaurentPoly.from_dict({k * factor: c for k, c in value.terms()})


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, eq=False)
class TateRootClass:
    """
    Класс Σ b_k L^{k/n}.

    Равенство и хэш — по нормализованной записи (наименьший общий порядок корня).

    Attributes:
        root_order: n >= 1
        value: Многочлен Лорана от t, tⁿ = L
    """

    root_order: int
    value: LaurentPoly = field(default_factory=LaurentPoly)

    def __post_init__(self) -> None:
        if self.root_order < 1:
            raise TateRootError(f"Порядок корня Тейта должен быть >= 1, получено {self.root_order}")

    @classmethod
    def from_class(cls, c: GrothClass) -> "TateRootClass":
        return cls(1, c.value)

    def terms(self) -> List[Tuple[Fraction, int]]:
        """Пары (показатель степени L, коэффициент)."""
        return [(Fraction(k, self.root_order), c) for k, c in self.value.terms()]

    def normalized(self) -> "TateRootClass":
        g = self.root_order
        for k, _ in self.value.terms():
            g = gcd(g, k)
        if g == 1:
            return self
        return TateRootClass(
            self.root_order // g,
            LaurentPoly.from_dict({k // g: c for k, c in self.value.terms()}),
        )

    def lift(self, order: int) -> "TateRootClass":
        """Запись при порядке корня order, кратном текущему."""
        if order % self.root_order:
            raise TateRootError(f"Порядок {order} не кратен {self.root_order}")
        return TateRootClass(order, _scale_exponents(self.value, order // self.root_order))

    def _common(self, other: "TateRootClass") -> Tuple["TateRootClass", "TateRootClass"]:
        order = _lcm(self.root_order, other.root_order)
        return self.lift(order), other.lift(order)

    def __add__(self, other: "TateRootClass") -> "TateRootClass":
        a, b = self._common(other)
        return TateRootClass(a.root_order, a.value + b.value)

    def __neg__(self) -> "TateRootClass":
        return TateRootClass(self.root_order, -self.value)

    def __sub__(self, other: "TateRootClass") -> "TateRootClass":
        return self + (-other)

    def __mul__(self, other: "TateRootClass") -> "TateRootClass":
        return rational_power_mul(self, other)

    def _key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        n = self.normalized()
        return n.root_order, tuple(n.value.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TateRootClass):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def to_groth_class(self) -> GrothClass:
        ok, k = is_integral(self)
        if not ok:
            raise TateRootError(
                f"Показатель t^{k} не кратен {self.root_order}", {"exponent": k or 0}
            )
        n = self.root_order
        return GrothClass(LaurentPoly.from_dict({e // n: c for e, c in self.value.terms()}))

    def to_json(self) -> Dict[str, object]:
        return {"root_order": self.root_order, "value": format_poly(self.value)}

    def __str__(self) -> str:
        if self.value.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self.terms(), reverse=True):
            if e == 0:
                mono = ""
            elif e.denominator == 1:
                mono = "L" if e == 1 else f"L^{e.numerator}"
            else:
                mono = f"L^({e.numerator}/{e.denominator})"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def tate_root(c: Union[GrothClass, IntPoly], n: int) -> TateRootClass:
    """
    Каноническая структура корня Тейта: b_k L^k -> b_k L^{k/n}.

    Args:
        c: Класс с неотрицательными коэффициентами в базисе L^k
        n: Порядок корня

    Returns:
        TateRootClass с теми же коэффициентами при t^k

    Raises:
        TateRootError: Если есть отрицательный коэффициент или степень (свидетель в witness)
    """
    cls = GrothClass.coerce(c)
    for k, b in cls.value.terms():
        if b < 0 or k < 0:
            raise TateRootError(
                f"Нет F₁-структуры: коэффициент {b} при L^{k}", {"exponent": k, "coefficient": b}
            )
    return TateRootClass(n, cls.value)


def tate_root_from_cells(cells: CellDecomposition, n: int) -> TateRootClass:
    """M = ⊕_j L^{k_j / n} для X = ⨿ A^{k_j}."""
    return tate_root(cells.to_class(), n)


def tate_root_habiro(spec: IndVarietySpec, n: int, N: int) -> TateRootClass:
    """
    f(L^{1/n}) для усечения Σ_{m<N} α_m(L)(L^m − 1)···(L − 1).

    Args:
        spec: Описание инд-многообразия
        n: Порядок корня
        N: Число слагаемых

    Returns:
        TateRootClass порядка n
    """
    return TateRootClass(n, LaurentPoly.from_poly(spec.partial_sum(N)))


def is_integral(m: TateRootClass) -> Tuple[bool, Optional[int]]:
    """
    Лежит ли класс в Z[L, L⁻¹].

    Returns:
        (True, None) или (False, первый показатель t, не кратный root_order)
    """
    for k, _ in m.value.terms():
        if k % m.root_order:
            return False, k
    return True, None


@dataclass(frozen=True)
class OrbitClass:
    """
    Вычет в Z[t] / (t^m − 1).

    Attributes:
        modulus_order: m >= 1
        value: Многочлен степени < m
        root_order: Порядок корня Тейта, которому соответствует t
    """

    modulus_order: int
    value: IntPoly = field(default_factory=IntPoly)
    root_order: int = 1

    def __post_init__(self) -> None:
        if self.modulus_order < 1:
            raise TateRootError(f"Период должен быть >= 1, получено {self.modulus_order}")
        if self.value.degree >= self.modulus_order:
            folded = [0] * self.modulus_order
            for k, c in self.value.terms():
                folded[k % self.modulus_order] += c
            object.__setattr__(self, "value", IntPoly(tuple(folded)))

    def _same(self, other: "OrbitClass") -> None:
        if (self.modulus_order, self.root_order) != (other.modulus_order, other.root_order):
            raise TateRootError("Вычеты по разным модулям несовместимы")

    def __add__(self, other: "OrbitClass") -> "OrbitClass":
        self._same(other)
        return OrbitClass(self.modulus_order, self.value + other.value, self.root_order)

    def __mul__(self, other: "OrbitClass") -> "OrbitClass":
        self._same(other)
        return OrbitClass(self.modulus_order, self.value * other.value, self.root_order)

    def value_at_one(self) -> int:
        """Значение при t = 1; согласовано с N(1) исходного класса."""
        return sum(self.value.coeffs)

    def to_json(self) -> Dict[str, object]:
        return {
            "modulus_order": self.modulus_order,
            "root_order": self.root_order,
            "value": format_poly(self.value),
        }


def orbit_reduce(m: Union[TateRootClass, GrothClass], period: int) -> OrbitClass:
    """
    Редукция по модулю t^period − 1; отрицательные степени сводятся через t⁻¹ = t^{period−1}.

    Args:
        m: Класс с корнями Тейта или класс Гротендика (порядок корня 1)
        period: Период

    Returns:
        Канонический вычет
    """
    if period < 1:
        raise TateRootError(f"Период должен быть >= 1, получено {period}")
    root_order = 1
    value = m.value
    if isinstance(m, TateRootClass):
        root_order = m.root_order
    folded = [0] * period
    for k, c in value.terms():
        folded[k % period] += c
    return OrbitClass(period, IntPoly(tuple(folded)), root_order)


def ev_root_orbit(m: Union[TateRootClass, GrothClass], p: int, N: int) -> OrbitClass:
    """Отображение Z[L^{1/p}] -> Z[L^{1/p}] / (L^{N/p} − 1)."""
    tm = m if isinstance(m, TateRootClass) else TateRootClass.from_class(m)
    return orbit_reduce(tm.lift(p), N)


def rational_power_mul(a: TateRootClass, b: TateRootClass) -> TateRootClass:
    """Произведение при общем порядке корня lcm(n_a, n_b)."""
    x, y = a._common(b)
    return TateRootClass(x.root_order, x.value * y.value).normalized()


def rescale(a: Union[TateRootClass, GrothClass], r: Union[Fraction, int]) -> TateRootClass:
    """
    f(L) -> f(L^r) для положительного рационального r.

    L^{k/n} переходит в L^{k·u/(n·v)} при r = u/v.
    """
    r = Fraction(r)
    if r <= 0:
        raise TateRootError(f"Показатель r должен быть положительным, получено {r}")
    tm = a if isinstance(a, TateRootClass) else TateRootClass.from_class(a)
    scaled = _scale_exponents(tm.value, r.numerator)
    return TateRootClass(tm.root_order * r.denominator, scaled).normalized()
