"""
Простые поля F_p и матрицы над ними.

Этот модуль содержит PrimeField и MatrixFp с рангом через исключение Гаусса по модулю p.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from fzeta.core.config import ORACLE_MAX_PRIME
from fzeta.core.exceptions import OracleInputError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """
    Поле вычетов по простому модулю.

    Attributes:
        p: Простое p <= ORACLE_MAX_PRIME
    """

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise OracleInputError(f"{self.p} не является простым")
        if self.p > ORACLE_MAX_PRIME:
            raise OracleInputError(f"p={self.p} больше допустимого {ORACLE_MAX_PRIME}")

    def elements(self) -> range:
        return range(self.p)

    def reduce(self, x: int) -> int:
        return x % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise OracleInputError("Нуль необратим")
        return pow(x, -1, self.p)


def reduce_against(row: Sequence[int], basis: Sequence[Tuple[int, List[int]]], p: int) -> List[int]:
    """
    Сводит строку по эшелонированному базису (pivot, строка с единицей в pivot).

    Строка лежит в линейной оболочке базиса тогда и только тогда, когда результат нулевой.
    """
    v = [x % p for x in row]
    for piv, b in basis:
        c = v[piv]
        if c:
            v = [(x - c * y) % p for x, y in zip(v, b)]
    return v


def echelon_insert(v: List[int], p: int) -> Optional[Tuple[int, List[int]]]:
    """Нормированная строка базиса из ненулевого остатка или None."""
    for piv, c in enumerate(v):
        if c:
            inv = pow(c, -1, p)
            return piv, [(x * inv) % p for x in v]
    return None


@dataclass(frozen=True)
class MatrixFp:
    """
    Плотная матрица над F_p по строкам.

    Attributes:
        p: Модуль
        rows: Строки с элементами 0..p−1
    """

    p: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        PrimeField(self.p)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise OracleInputError("Строки матрицы разной длины")
        object.__setattr__(
            self, "rows", tuple(tuple(x % self.p for x in r) for r in self.rows)
        )

    @classmethod
    def from_flat(cls, p: int, entries: Sequence[int], n_rows: int, n_cols: int) -> "MatrixFp":
        return cls(p, tuple(tuple(entries[i * n_cols : (i + 1) * n_cols]) for i in range(n_rows)))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def transpose(self) -> "MatrixFp":
        return MatrixFp(self.p, tuple(zip(*self.rows)))

    def __matmul__(self, other: "MatrixFp") -> "MatrixFp":
        cols = list(zip(*other.rows))
        return MatrixFp(
            self.p,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) % self.p for col in cols)
                for row in self.rows
            ),
        )

    def rank(self) -> int:
        basis: List[Tuple[int, List[int]]] = []
        for row in self.rows:
            entry = echelon_insert(reduce_against(row, basis, self.p), self.p)
            if entry is not None:
                basis.append(entry)
        return len(basis)

    def is_invertible(self) -> bool:
        n, m = self.shape
        return n == m and self.rank() == n

    def is_rref(self) -> bool:
        """Приведённый ступенчатый вид: ведущие единицы, нули над и под ними."""
        last = -1
        pivots = []
        for row in self.rows:
            piv = next((i for i, x in enumerate(row) if x), None)
            if piv is None:
                last = len(row)
                continue
            if piv <= last or row[piv] != 1:
                return False
            last = piv
            pivots.append(piv)
        return all(
            sum(1 for row in self.rows if row[piv]) == 1 for piv in pivots
        )
