"""
Модуль fforacle: перебор над простыми полями.
"""

from fzeta.fforacle.field import PrimeField, MatrixFp, is_prime
from fzeta.fforacle.counts import (
    count_gl,
    count_matrix_equation,
    count_projective,
    count_grassmannian,
)

__all__ = [
    "PrimeField",
    "MatrixFp",
    "is_prime",
    "count_gl",
    "count_matrix_equation",
    "count_projective",
    "count_grassmannian",
]
