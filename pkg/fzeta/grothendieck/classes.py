"""
Классы в кольце Гротендика K₀(Var) и их разложения.

Этот модуль содержит GrothClass — многочлен Лорана от класса Лефшеца L, —
переход к базису T = L − 1 и сертификаты: разложения на торы и на аффинные клетки.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterable, Mapping, Tuple, Union

from fzeta.core.exceptions import PolynomialError, VerificationError
from fzeta.exactpoly.laurent import LaurentPoly
from fzeta.exactpoly.poly import IntPoly
from fzeta.utils.json_helpers import int_map_to_json

ClassLike = Union["GrothClass", LaurentPoly, IntPoly, int]

_T_PLUS_ONE = IntPoly((1, 1))
_L_MINUS_ONE = IntPoly((-1, 1))


@dataclass(frozen=True)
class GrothClass:
    """
    Класс [X] = Σ b_k L^k.

    Attributes:
        value: Многочлен Лорана от L
    """

    value: LaurentPoly = field(default_factory=LaurentPoly)

    @classmethod
    def coerce(cls, other: ClassLike) -> "GrothClass":
        if isinstance(other, GrothClass):
            return other
        return cls(LaurentPoly.coerce(other))

    @classmethod
    def from_poly(cls, p: IntPoly) -> "GrothClass":
        return cls(LaurentPoly.from_poly(p))

    @classmethod
    def point(cls) -> "GrothClass":
        return cls.coerce(1)

    @classmethod
    def lefschetz(cls) -> "GrothClass":
        """L = [A¹]."""
        return cls(LaurentPoly.monomial(1))

    @classmethod
    def torus(cls) -> "GrothClass":
        """T = [G_m] = L − 1."""
        return cls.from_poly(_L_MINUS_ONE)

    @classmethod
    def affine(cls, k: int) -> "GrothClass":
        return cls(LaurentPoly.monomial(k))

    @classmethod
    def punctured_affine(cls, k: int) -> "GrothClass":
        """[A^k ∖ 0] = L^k − 1."""
        return cls.from_poly(IntPoly.monomial(k) - 1)

    @classmethod
    def projective(cls, n: int) -> "GrothClass":
        """[Pⁿ] = 1 + L + ... + Lⁿ."""
        return cls.from_poly(IntPoly((1,) * (n + 1)))

    @property
    def is_polynomial(self) -> bool:
        return self.value.is_polynomial

    def to_poly(self) -> IntPoly:
        return self.value.to_poly()

    def lefschetz_coeffs(self) -> Dict[int, int]:
        return self.value.to_dict()

    def dual(self) -> "GrothClass":
        """[X](−L)."""
        return GrothClass(self.value.substitute_sign())

    def __add__(self, other: ClassLike) -> "GrothClass":
        return GrothClass(self.value + GrothClass.coerce(other).value)

    __radd__ = __add__

    def __sub__(self, other: ClassLike) -> "GrothClass":
        return GrothClass(self.value - GrothClass.coerce(other).value)

    def __neg__(self) -> "GrothClass":
        return GrothClass(-self.value)

    def __mul__(self, other: ClassLike) -> "GrothClass":
        return GrothClass(self.value * GrothClass.coerce(other).value)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GrothClass":
        return GrothClass(self.value**e)

    def __str__(self) -> str:
        return self.value.to_str("L")


LEFSCHETZ = GrothClass.lefschetz()
TORUS = GrothClass.torus()
POINT = GrothClass.point()


def to_torus_basis(c: ClassLike) -> Dict[int, int]:
    """
    Коэффициенты класса в базисе T^k, T = L − 1.

    Args:
        c: Полиномиальный класс

    Returns:
        {k: a_k} только с ненулевыми a_k

    Raises:
        PolynomialError: Если у класса есть отрицательные степени L
    """
    poly = GrothClass.coerce(c).to_poly()
    return poly.compose(_T_PLUS_ONE).to_dict()


def from_torus_basis(coeffs: Mapping[int, int]) -> GrothClass:
    """Σ a_k (L − 1)^k."""
    return GrothClass.from_poly(IntPoly.from_dict(dict(coeffs)).compose(_L_MINUS_ONE))


@dataclass(frozen=True)
class TorusDecomposition:
    """
    Разбиение многообразия на торы: a_k копий G_m^k.

    Attributes:
        counts: {k: a_k}, все a_k > 0
    """

    counts: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Dict[int, int] = {}
        for k, a in sorted(self.counts.items()):
            if a < 0 or k < 0:
                raise PolynomialError(f"Некорректная кратность тора: {a}·T^{k}")
            if a:
                clean[k] = a
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_class(cls, c: ClassLike) -> "TorusDecomposition":
        """Сертификат по классу с неотрицательными коэффициентами в базисе T."""
        return cls(to_torus_basis(c))

    def to_class(self) -> GrothClass:
        return from_torus_basis(self.counts)

    @property
    def dimension(self) -> int:
        return max(self.counts, default=-1)

    @property
    def tori(self) -> int:
        """Число торов в разбиении."""
        return sum(self.counts.values())

    @property
    def euler_characteristic(self) -> int:
        """χ = a_0: торы положительной размерности вклада не дают."""
        return self.counts.get(0, 0)

    def count(self, x: int) -> int:
        """Σ a_k (x − 1)^k: число точек над полем из x элементов."""
        return sum(a * (x - 1) ** k for k, a in self.counts.items())

    def to_json(self) -> Dict[str, str]:
        return int_map_to_json(self.counts)


@dataclass(frozen=True)
class CellDecomposition:
    """
    Разбиение на аффинные клетки A^{k_j}.

    Attributes:
        cells: Размерности клеток по возрастанию
    """

    cells: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(k < 0 for k in self.cells):
            raise PolynomialError("Размерность клетки должна быть неотрицательной")
        object.__setattr__(self, "cells", tuple(sorted(self.cells)))

    @classmethod
    def from_class(cls, c: ClassLike) -> "CellDecomposition":
        out = []
        for k, b in GrothClass.coerce(c).value.terms():
            if b < 0 or k < 0:
                raise PolynomialError(f"Класс не раскладывается на клетки: {b}·L^{k}")
            out.extend([k] * b)
        return cls(tuple(out))

    def to_class(self) -> GrothClass:
        counts: Dict[int, int] = {}
        for k in self.cells:
            counts[k] = counts.get(k, 0) + 1
        return GrothClass(LaurentPoly.from_dict(counts))

    def to_torus_decomposition(self) -> TorusDecomposition:
        """A^k = (G_m ⊔ pt)^k даёт торификацию каждой клетки."""
        out = TorusDecomposition()
        for k in self.cells:
            out = union_decomposition(out, torify_affine(k))
        return out


def torify_affine(k: int) -> TorusDecomposition:
    return TorusDecomposition({j: comb(k, j) for j in range(k + 1)})


def product_decomposition(a: TorusDecomposition, b: TorusDecomposition) -> TorusDecomposition:
    """Торификация произведения: G_m^i × G_m^j = G_m^{i+j}."""
    out: Dict[int, int] = {}
    for i, x in a.counts.items():
        for j, y in b.counts.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return TorusDecomposition(out)


def union_decomposition(*parts: TorusDecomposition) -> TorusDecomposition:
    out: Dict[int, int] = {}
    for part in parts:
        for k, a in part.counts.items():
            out[k] = out.get(k, 0) + a
    return TorusDecomposition(out)


def torify_punctured_affine(k: int) -> TorusDecomposition:
    """
    Торификация A^k ∖ 0 индукцией по k.

    A^{k+1} ∖ 0 = (A^k × G_m) ⊔ (A^k ∖ 0), где A^k = (G_m ⊔ pt)^k.

    Args:
        k: Размерность (k >= 1)

    Returns:
        Разложение с {j: C(k, j)} для j = 1..k
    """
    if k < 1:
        raise PolynomialError(f"A^k ∖ 0 требует k >= 1, получено {k}")
    torus = TorusDecomposition({1: 1})
    current = torus
    for j in range(1, k):
        current = union_decomposition(product_decomposition(torify_affine(j), torus), current)
    if current.to_class() != GrothClass.punctured_affine(k):
        raise VerificationError(f"Торификация A^{k} ∖ 0 не восстанавливает L^{k} − 1")
    return current


def product_of(decompositions: Iterable[TorusDecomposition]) -> TorusDecomposition:
    out = TorusDecomposition({0: 1})
    for d in decompositions:
        out = product_decomposition(out, d)
    return out
