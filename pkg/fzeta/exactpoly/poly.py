"""
Многочлены с целыми коэффициентами произвольной точности.

Этот модуль содержит неизменяемый тип IntPoly, деление с остатком на многочлен
с единичным старшим коэффициентом и умножение Карацубы для больших степеней.
"""

from __future__ import annotations
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from fzeta.core.config import KARATSUBA_THRESHOLD
from fzeta.core.exceptions import PolynomialError

PolyLike = Union["IntPoly", int]


def format_terms(terms: Iterable[Tuple[int, int]], var: str = "q") -> str:
    """Человекочитаемая запись Σ c·var^k по убыванию степени."""
    parts: List[str] = []
    for k, c in sorted(terms, reverse=True):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(f"{sign} {body}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(int(c) for c in coeffs[:end])


def _add_lists(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _mul_lists(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)

    m = max(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _mul_lists(a0, b0)
    z2 = _mul_lists(a1, b1)
    z1 = _mul_lists(_add_lists(a0, a1), _add_lists(b0, b1))

    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
        out[i + m] -= c
    for i, c in enumerate(z2):
        out[i + 2 * m] += c
        out[i + m] -= c
    for i, c in enumerate(z1):
        out[i + m] += c
    return out


@dataclass(frozen=True)
class IntPoly:
    """
    Многочлен от q с целыми коэффициентами.

    Коэффициенты хранятся по возрастанию степени без хвостовых нулей;
    у нулевого многочлена кортеж пуст и степень равна −1.

    Attributes:
        coeffs: Коэффициенты c_0, c_1, ..., c_d
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # ------------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        """c·q^k, k >= 0."""
        if k < 0:
            raise PolynomialError(f"Отрицательная степень {k} в многочлене")
        return cls((0,) * k + (c,))

    @classmethod
    def q(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "IntPoly":
        if not terms:
            return cls.zero()
        if min(terms) < 0:
            raise PolynomialError(f"Отрицательная степень {min(terms)} в многочлене")
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] += c
        return cls(tuple(out))

    @classmethod
    def coerce(cls, other: PolyLike) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"Ожидался IntPoly или int, получено {type(other).__name__}")

    # ------------------------------------------------------------------
    # Свойства
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Пары (степень, коэффициент) с ненулевым коэффициентом по возрастанию."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def to_dict(self) -> Dict[int, int]:
        return dict(self.terms())

    # ------------------------------------------------------------------
    # Арифметика
    # ------------------------------------------------------------------

    def __add__(self, other: PolyLike) -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        return IntPoly(tuple(_add_lists(self.coeffs, IntPoly.coerce(other).coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: PolyLike) -> "IntPoly":
        if not isinstance(other, (IntPoly, int)):
            return NotImplemented
        return self + (-IntPoly.coerce(other))

    def __rsub__(self, other: PolyLike) -> "IntPoly":
        return IntPoly.coerce(other) - self

    def __mul__(self, other: PolyLike) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly(tuple(_mul_lists(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise PolynomialError("Отрицательная степень многочлена")
        result = IntPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        return divrem_unit(self, other)

    def shift(self, k: int) -> "IntPoly":
        """Умножение на q^k, k >= 0."""
        if k < 0:
            raise PolynomialError(f"Сдвиг на отрицательную степень {k}")
        if self.is_zero or k == 0:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def times_q_power_minus_one(self, k: int) -> "IntPoly":
        """Умножение на (q^k − 1) через сдвиг и вычитание."""
        return self.shift(k) - self

    def substitute_power(self, n: int) -> "IntPoly":
        """p(qⁿ), n >= 1."""
        if n < 1:
            raise PolynomialError(f"Подстановка q -> q^{n} требует n >= 1")
        if n == 1 or self.degree <= 0:
            return self
        out = [0] * (self.degree * n + 1)
        for k, c in enumerate(self.coeffs):
            out[k * n] = c
        return IntPoly(tuple(out))

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """p(r(q)) схемой Горнера."""
        result = IntPoly.zero()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def hasse_derivative(self, j: int) -> "IntPoly":
        """Σ_i C(i, j) c_i q^{i−j}: j-я производная Хассе."""
        if j < 0:
            raise PolynomialError("Порядок производной должен быть неотрицательным")
        return IntPoly(tuple(comb(i, j) * c for i, c in enumerate(self.coeffs) if i >= j))

    def eval_int(self, x: int) -> int:
        """Точное значение в целой точке (схема Горнера)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # ------------------------------------------------------------------
    # Представление
    # ------------------------------------------------------------------

    def to_str(self, var: str = "q") -> str:
        return format_terms(self.terms(), var)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"IntPoly({self.to_str()!r})"


def divrem_unit(a: IntPoly, d: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """
    Деление с остатком на многочлен со старшим коэффициентом ±1.

    Args:
        a: Делимое
        d: Делитель, старший коэффициент которого равен ±1

    Returns:
        Пара (частное, остаток), deg(остаток) < deg(d)

    Raises:
        PolynomialError: Если d нулевой или его старший коэффициент не ±1
    """
    if d.is_zero:
        raise PolynomialError("Деление на нулевой многочлен")
    lc = d.leading
    if lc not in (1, -1):
        raise PolynomialError(f"Старший коэффициент делителя {lc} не является единицей")

    n = d.degree
    r = list(a.coeffs)
    if len(r) <= n:
        return IntPoly.zero(), a

    dd = d.coeffs
    quot = [0] * (len(r) - n)
    for i in range(len(r) - 1, n - 1, -1):
        c = r[i]
        if c == 0:
            continue
        t = c * lc
        quot[i - n] = t
        base = i - n
        for j in range(n + 1):
            if dd[j]:
                r[base + j] -= t * dd[j]
    return IntPoly(tuple(quot)), IntPoly(tuple(r[:n]))


def exact_div(a: IntPoly, d: IntPoly) -> IntPoly:
    """Точное частное a / d; ненулевой остаток считается ошибкой."""
    quot, rem = divrem_unit(a, d)
    if not rem.is_zero:
        raise PolynomialError(f"{a} не делится на {d}")
    return quot


def binomial_shift(n: int) -> IntPoly:
    """(q + 1)ⁿ."""
    return IntPoly(tuple(comb(n, k) for k in range(n + 1)))
