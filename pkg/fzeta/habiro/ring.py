"""
Усечённое кольцо Хабиро Z[q] / ((q)_N).

Этот модуль содержит HabiroElement (канонический остаток по модулю
(q)_N = (q − 1)(q² − 1)···(q^N − 1)), нормальную форму Σ a_m(q)(q)_m,
отображения вычисления ev_n, ev_ζ, разложение Тейлора в корне из единицы,
эндоморфизм Фробениуса q -> qⁿ и обратный к L.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from fzeta.core.exceptions import LevelMismatchError, TruncationLevelError, VerificationError
from fzeta.exactpoly.cyclotomic import CyclotomicInt, RootOfUnity, eval_root
from fzeta.exactpoly.poly import IntPoly, divrem_unit
from fzeta.exactpoly.qanalog import pochhammer, pochhammer_one_minus
from fzeta.utils.text import format_poly


@dataclass(frozen=True)
class HabiroElement:
    """
    Элемент Z[q] / ((q)_N).

    Attributes:
        level: Уровень усечения N >= 1
        rep: Канонический остаток, deg(rep) < N(N + 1)/2
    """

    level: int
    rep: IntPoly = field(default_factory=IntPoly)

    def __post_init__(self) -> None:
        if self.level < 1:
            raise TruncationLevelError(f"Уровень усечения должен быть >= 1, получено {self.level}")
        ideal = pochhammer(self.level)
        if self.rep.degree >= ideal.degree:
            object.__setattr__(self, "rep", divrem_unit(self.rep, ideal)[1])

    @classmethod
    def one(cls, level: int) -> "HabiroElement":
        return cls(level, IntPoly.one())

    @classmethod
    def q(cls, level: int) -> "HabiroElement":
        return cls(level, IntPoly.q())

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def project(self, level: int) -> "HabiroElement":
        """Образ при Z[q]/((q)_N) -> Z[q]/((q)_{N'}), N' <= N."""
        if level > self.level:
            raise TruncationLevelError(
                f"Проекция возможна только на меньший уровень: {level} > {self.level}"
            )
        return HabiroElement(level, self.rep)

    def _same_level(self, other: "HabiroElement") -> None:
        if self.level != other.level:
            raise LevelMismatchError(
                f"Уровни {self.level} и {other.level} различны; используйте project=True"
            )

    def __add__(self, other: "HabiroElement") -> "HabiroElement":
        self._same_level(other)
        return HabiroElement(self.level, self.rep + other.rep)

    def __sub__(self, other: "HabiroElement") -> "HabiroElement":
        self._same_level(other)
        return HabiroElement(self.level, self.rep - other.rep)

    def __neg__(self) -> "HabiroElement":
        return HabiroElement(self.level, -self.rep)

    def __mul__(self, other: "HabiroElement") -> "HabiroElement":
        self._same_level(other)
        return HabiroElement(self.level, self.rep * other.rep)

    def to_json(self) -> dict:
        return {"level": self.level, "rep": format_poly(self.rep)}

    def __str__(self) -> str:
        return f"{self.rep} mod (q)_{self.level}"


def make(level: int, p: IntPoly) -> HabiroElement:
    """Класс многочлена p в Z[q] / ((q)_N)."""
    return HabiroElement(level, p)


def _align(
    a: HabiroElement, b: HabiroElement, project: bool
) -> Tuple[HabiroElement, HabiroElement]:
    if a.level == b.level or not project:
        return a, b
    level = min(a.level, b.level)
    return a.project(level), b.project(level)


def habiro_add(a: HabiroElement, b: HabiroElement, project: bool = False) -> HabiroElement:
    a, b = _align(a, b, project)
    return a + b


def habiro_mul(a: HabiroElement, b: HabiroElement, project: bool = False) -> HabiroElement:
    a, b = _align(a, b, project)
    return a * b


@dataclass(frozen=True)
class HabiroNormalForm:
    """
    Запись rep = Σ_{m<N} a_m(q)·(q)_m с deg(a_m) <= m.

    Attributes:
        coeff_polys: a_0, ..., a_{N−1} во внутреннем соглашении (q − 1)(q² − 1)···
    """

    coeff_polys: Tuple[IntPoly, ...]

    @property
    def level(self) -> int:
        return len(self.coeff_polys)

    def reconstruct(self) -> IntPoly:
        out = IntPoly.zero()
        for m, a in enumerate(self.coeff_polys):
            out = out + a * pochhammer(m)
        return out

    def display(self) -> Tuple[IntPoly, ...]:
        """Коэффициенты при (1 − q)(1 − q²)···(1 − q^m): a_m·(−1)^m."""
        return tuple(-a if m % 2 else a for m, a in enumerate(self.coeff_polys))

    def to_json(self, one_minus_q: bool = False) -> dict:
        polys = self.display() if one_minus_q else self.coeff_polys
        return {
            "a": [format_poly(p) for p in polys],
            "convention": "1-q" if one_minus_q else "q-1",
        }


def normal_form(a: HabiroElement) -> HabiroNormalForm:
    """
    Нормальная форма жадным делением сверху вниз.

    Для m = N−1, ..., 0: a_m — частное текущего остатка при делении на (q)_m.
    Мономы q^j (q)_m, 0 <= j <= m, имеют попарно различные степени
    j + m(m+1)/2, поэтому запись единственна.
    """
    coeffs: List[IntPoly] = [IntPoly.zero()] * a.level
    rest = a.rep
    for m in range(a.level - 1, -1, -1):
        coeffs[m], rest = divrem_unit(rest, pochhammer(m))
    return HabiroNormalForm(tuple(coeffs))


def ev_n(a: HabiroElement, n: int) -> IntPoly:
    """
    Образ в Z[q] / (qⁿ − 1).

    Raises:
        TruncationLevelError: Если n > level (qⁿ − 1 не делит (q)_N)
    """
    if n < 1 or n > a.level:
        raise TruncationLevelError(
            f"Недостаточный уровень усечения: ev_{n} требует 1 <= n <= {a.level}"
        )
    return divrem_unit(a.rep, IntPoly.monomial(n) - 1)[1]


def ev_zeta(a: HabiroElement, z: RootOfUnity) -> CyclotomicInt:
    """
    Значение в корне из единицы порядка n <= level.

    Raises:
        TruncationLevelError: Если порядок корня больше уровня
    """
    if z.order > a.level:
        raise TruncationLevelError(
            f"Недостаточный уровень усечения: порядок {z.order} > уровня {a.level}"
        )
    return eval_root(a.rep, z)


def taylor_zeta(a: HabiroElement, z: RootOfUnity, K: int) -> List[CyclotomicInt]:
    """
    Первые K коэффициентов разложения rep(ζ + s) по степеням s.

    Коэффициент при s^j равен значению j-й производной Хассе в ζ.
    (q)_N делится на (q − ζ)^{⌊N/n⌋}, поэтому определены только K <= ⌊N/n⌋.

    Raises:
        TruncationLevelError: Если K > ⌊level / order⌋
    """
    limit = a.level // z.order
    if K < 0 or K > limit:
        raise TruncationLevelError(
            f"Недостаточный уровень усечения: K={K} > ⌊{a.level}/{z.order}⌋ = {limit}"
        )
    return [eval_root(a.rep.hasse_derivative(j), z) for j in range(K)]


def frobenius(a: HabiroElement, n: int) -> HabiroElement:
    """σ_n: q -> qⁿ; (q)_N делит σ_n((q)_N), поэтому отображение корректно."""
    if n < 1:
        raise TruncationLevelError(f"Эндоморфизм σ_n требует n >= 1, получено {n}")
    return HabiroElement(a.level, a.rep.substitute_power(n))


def inverse_series_partial_sum(N: int, one_minus_q: bool = True) -> IntPoly:
    """
    Σ_{m<N} q^m·P_m, где P_m = (1 − q)···(1 − q^m) или (q − 1)···(q^m − 1).
    """
    out = IntPoly.zero()
    for m in range(N):
        p = pochhammer_one_minus(m) if one_minus_q else pochhammer(m)
        out = out + p.shift(m)
    return out


def inverse_identity_defect(N: int, one_minus_q: bool = True) -> IntPoly:
    """Остаток q·S_N − 1 по модулю (q)_N для частичной суммы обратного к L."""
    s = inverse_series_partial_sum(N, one_minus_q)
    return make(N, s.shift(1) - 1).rep


def inverse_lefschetz(level: int) -> HabiroElement:
    """
    Обратный к L на уровне N: Σ_{m=0}^{N−1} q^m (1 − q)(1 − q²)···(1 − q^m).

    Слагаемые телескопируются: q^{m+1}P_m = P_m − P_{m+1}, откуда q·S_N = 1 − P_N.

    Raises:
        VerificationError: Если q·результат != 1 по модулю (q)_N
    """
    inv = make(level, inverse_series_partial_sum(level, one_minus_q=True))
    if HabiroElement.q(level) * inv != HabiroElement.one(level):
        raise VerificationError(f"q·L⁻¹ != 1 на уровне {level}")
    logging.debug(f"[habiro] L⁻¹ на уровне {level}: {inv.rep}")
    return inv
