import pytest
from hypothesis import given
from hypothesis import strategies as st

from fzeta.core import OracleBudgetError, OracleInputError
from fzeta.exactpoly import q_binomial
from fzeta.families import gl_count
from fzeta.fforacle import (
    MatrixFp,
    PrimeField,
    count_gl,
    count_grassmannian,
    count_matrix_equation,
    count_projective,
    is_prime,
)

SYMPLECTIC_2 = ((0, 1), (-1, 0))


class TestField:
    def test_primes(self):
        assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]

    @pytest.mark.parametrize("p", [1, 4, 9, 17])
    def test_rejected_moduli(self, p):
        with pytest.raises(OracleInputError):
            PrimeField(p)

    @given(p=st.sampled_from([2, 3, 5, 7, 11, 13]), data=st.data())
    def test_inverse(self, p, data):
        x = data.draw(st.integers(1, p - 1))
        field = PrimeField(p)
        assert field.reduce(x * field.inv(x)) == 1

    def test_matrix_basics(self):
        M = MatrixFp(3, ((1, 2), (2, 4)))
        assert M.rank() == 1
        assert not M.is_invertible()
        assert MatrixFp(5, ((1, 2), (3, 4))).is_invertible()
        assert MatrixFp.from_flat(2, (1, 0, 0, 1), 2, 2).rows == ((1, 0), (0, 1))
        with pytest.raises(OracleInputError):
            MatrixFp(3, ((1, 2), (1,)))

    def test_rref(self):
        assert MatrixFp(3, ((1, 0, 2), (0, 1, 1))).is_rref()
        assert not MatrixFp(3, ((1, 1, 0), (0, 1, 0))).is_rref()
        assert not MatrixFp(3, ((0, 1, 0), (1, 0, 0))).is_rref()


class TestCounts:
    @pytest.mark.parametrize(
        "m, p, expected", [(0, 2, 1), (1, 5, 4), (2, 2, 6), (2, 3, 48), (3, 2, 168)]
    )
    def test_gl(self, m, p, expected):
        assert count_gl(m, p) == expected

    @pytest.mark.parametrize("m, p", [(1, 3), (2, 2), (2, 3), (2, 5), (3, 2)])
    def test_gl_matches_product_formula(self, m, p):
        assert count_gl(m, p) == gl_count(m, p)

    def test_pruned_search_matches_brute_force(self):
        assert count_gl(2, 3, prune=False) == count_gl(2, 3) == 48

    def test_workers(self):
        assert count_gl(2, 3, workers=2) == 48

    @pytest.mark.slow
    def test_gl3_over_f5(self):
        assert count_gl(3, 5) == gl_count(3, 5)

    @pytest.mark.parametrize("p, expected", [(2, 6), (3, 24), (5, 120)])
    def test_symplectic(self, p, expected):
        assert count_matrix_equation(SYMPLECTIC_2, p) == expected

    def test_orthogonal(self):
        assert count_matrix_equation(((1, 0), (0, 1)), 3) == 8

    def test_singular_form_rejected(self):
        with pytest.raises(OracleInputError):
            count_matrix_equation(((1, 1), (1, 1)), 3)

    @pytest.mark.parametrize("n, p", [(1, 2), (2, 2), (2, 3), (3, 5)])
    def test_projective(self, n, p):
        assert count_projective(n, p) == sum(p**i for i in range(n + 1))

    @pytest.mark.parametrize("n, j, p", [(4, 2, 2), (3, 1, 3), (5, 2, 2), (4, 3, 3)])
    def test_grassmannian(self, n, j, p):
        assert count_grassmannian(n, j, p) == q_binomial(n, j).eval_int(p)

    def test_grassmannian_edges(self):
        assert count_grassmannian(4, 2, 2) == 35
        assert count_grassmannian(3, 0, 2) == 1
        assert count_grassmannian(3, 4, 2) == 0


class TestGuards:
    def test_budget(self):
        with pytest.raises(OracleBudgetError):
            count_gl(5, 13)

    def test_negative_size(self):
        with pytest.raises(OracleInputError):
            count_gl(-1, 2)

    def test_large_prime_rejected(self):
        with pytest.raises(OracleInputError):
            count_projective(1, 17)
