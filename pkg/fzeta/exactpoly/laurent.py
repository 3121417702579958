"""
Многочлены Лорана с целыми коэффициентами.

Этот модуль содержит тип LaurentPoly = q^offset · poly(q), poly(0) != 0.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Tuple, Union

from fzeta.core.exceptions import PolynomialError
from fzeta.exactpoly.poly import IntPoly, format_terms

LaurentLike = Union["LaurentPoly", IntPoly, int]


@dataclass(frozen=True)
class LaurentPoly:
    """
    Многочлен Лорана q^offset · poly.

    После нормализации poly не делится на q; у нуля offset = 0.

    Attributes:
        poly: Многочлен с ненулевым свободным членом (или нуль)
        offset: Младшая степень
    """

    poly: IntPoly = field(default_factory=IntPoly)
    offset: int = 0

    def __post_init__(self) -> None:
        coeffs = self.poly.coeffs
        if not coeffs:
            object.__setattr__(self, "offset", 0)
            return
        low = 0
        while coeffs[low] == 0:
            low += 1
        if low:
            object.__setattr__(self, "poly", IntPoly(coeffs[low:]))
            object.__setattr__(self, "offset", self.offset + low)

    @classmethod
    def from_poly(cls, p: IntPoly) -> "LaurentPoly":
        return cls(p, 0)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls(IntPoly.constant(c), k)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {k: c for k, c in terms.items() if c}
        if not terms:
            return cls()
        low = min(terms)
        return cls(IntPoly.from_dict({k - low: c for k, c in terms.items()}), low)

    @classmethod
    def coerce(cls, other: LaurentLike) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return cls(IntPoly.coerce(other), 0)

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.is_zero or self.offset >= 0

    @property
    def min_exponent(self) -> int:
        return self.offset

    @property
    def max_exponent(self) -> int:
        return self.offset + self.poly.degree

    def coeff(self, k: int) -> int:
        return self.poly.coeff(k - self.offset)

    def terms(self) -> Iterator[Tuple[int, int]]:
        for k, c in self.poly.terms():
            yield k + self.offset, c

    def to_dict(self) -> Dict[int, int]:
        return dict(self.terms())

    def to_poly(self) -> IntPoly:
        """Многочлен, если все степени неотрицательны."""
        if not self.is_polynomial:
            raise PolynomialError(f"Класс содержит отрицательную степень q^{self.offset}")
        return self.poly.shift(self.offset) if not self.is_zero else IntPoly.zero()

    def _aligned(self, other: "LaurentPoly") -> Tuple[IntPoly, IntPoly, int]:
        low = min(self.offset, other.offset)
        return self.poly.shift(self.offset - low), other.poly.shift(other.offset - low), low

    def __add__(self, other: LaurentLike) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, IntPoly, int)):
            return NotImplemented
        o = LaurentPoly.coerce(other)
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        a, b, low = self._aligned(o)
        return LaurentPoly(a + b, low)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self.poly, self.offset)

    def __sub__(self, other: LaurentLike) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, IntPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: LaurentLike) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: LaurentLike) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, IntPoly, int)):
            return NotImplemented
        o = LaurentPoly.coerce(other)
        return LaurentPoly(self.poly * o.poly, self.offset + o.offset)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if len(self.poly.coeffs) != 1 or self.poly.leading not in (1, -1):
                raise PolynomialError("Обратим только мономиал ±q^k")
            return LaurentPoly(IntPoly.constant(self.poly.leading ** (-e)), self.offset * e)
        return LaurentPoly(self.poly**e, self.offset * e)

    def substitute_sign(self) -> "LaurentPoly":
        """f(−q)."""
        return LaurentPoly.from_dict({k: (-c if k % 2 else c) for k, c in self.terms()})

    def eval_int(self, x: int) -> int:
        """Значение в целой точке; отрицательные степени допустимы только при x = ±1."""
        if self.offset < 0 and x not in (1, -1):
            raise PolynomialError(f"Значение q^{self.offset} в точке {x} не целое")
        base = self.poly.eval_int(x)
        if self.offset >= 0:
            return base * x**self.offset
        return base * x ** (-self.offset)

    def to_str(self, var: str = "q") -> str:
        return format_terms(self.terms(), var)

    def __str__(self) -> str:
        return self.to_str()
