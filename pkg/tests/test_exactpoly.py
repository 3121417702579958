import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fzeta.core.exceptions import PolynomialError
from fzeta.exactpoly import (
    CyclotomicInt,
    IntPoly,
    LaurentPoly,
    PowerSeriesTrunc,
    RootOfUnity,
    cyclotomic,
    divrem_unit,
    euler_phi,
    eval_root,
    exact_div,
    pochhammer,
    pochhammer_one_minus,
    q_binomial,
    q_factorial,
    q_int,
    series_inverse,
    series_mul,
)

coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=12)
polys = coeff_lists.map(lambda c: IntPoly(tuple(c)))
monic = st.lists(st.integers(min_value=-9, max_value=9), max_size=6).map(
    lambda c: IntPoly(tuple(c) + (1,))
)


def naive_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


class TestIntPoly:
    def test_trailing_zeros_trimmed(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly((0, 0)).is_zero
        assert IntPoly.zero().degree == -1

    def test_constructors(self):
        assert IntPoly.monomial(3, 2).coeffs == (0, 0, 0, 2)
        assert IntPoly.from_dict({2: 1, 0: -1}) == IntPoly((-1, 0, 1))
        with pytest.raises(PolynomialError):
            IntPoly.monomial(-1)

    @given(a=polys, b=polys, c=polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert a - a == IntPoly.zero()

    @given(
        a=st.lists(st.integers(-1000, 1000), min_size=60, max_size=160),
        b=st.lists(st.integers(-1000, 1000), min_size=60, max_size=160),
    )
    def test_large_product_matches_convolution(self, a, b):
        product = IntPoly(tuple(a)) * IntPoly(tuple(b))
        assert product == IntPoly(naive_mul(a, b))

    @given(a=polys, d=monic)
    def test_division_by_monic(self, a, d):
        quot, rem = divrem_unit(a, d)
        assert quot * d + rem == a
        assert rem.degree < d.degree

    def test_division_by_non_unit_rejected(self):
        with pytest.raises(PolynomialError):
            divrem_unit(IntPoly((1, 1)), IntPoly((1, 2)))
        with pytest.raises(PolynomialError):
            exact_div(IntPoly((1, 0, 1)), IntPoly((1, 1)))

    def test_exact_division(self):
        assert exact_div(IntPoly.monomial(4) - 1, IntPoly((-1, 1))) == q_int(4)

    def test_hasse_derivative(self):
        cube = IntPoly.monomial(3)
        assert cube.hasse_derivative(0) == cube
        assert cube.hasse_derivative(1) == IntPoly.monomial(2, 3)
        assert cube.hasse_derivative(2) == IntPoly.monomial(1, 3)
        assert cube.hasse_derivative(4).is_zero

    def test_substitution_and_composition(self):
        assert IntPoly((1, 1)).substitute_power(3) == IntPoly((1, 0, 0, 1))
        assert IntPoly.monomial(2).compose(IntPoly((1, 1))) == IntPoly((1, 2, 1))

    def test_big_integer_evaluation(self):
        assert IntPoly.monomial(100).eval_int(2) == 2**100
        assert IntPoly((1, 1)).eval_int(-1) == 0

    def test_to_str(self):
        assert str(IntPoly((1, 0, -1))) == str(IntPoly.from_dict({0: 1, 2: -1}))
        assert str(IntPoly.zero()) == "0"


class TestLaurentPoly:
    def test_normalization(self):
        p = LaurentPoly(IntPoly((0, 0, 1)), 0)
        assert p.offset == 2
        assert p.poly == IntPoly.one()
        assert LaurentPoly().offset == 0

    def test_arithmetic(self):
        assert LaurentPoly.monomial(-2) * LaurentPoly.monomial(3) == LaurentPoly.monomial(1)
        s = LaurentPoly.monomial(-1) + LaurentPoly.monomial(1)
        assert s.to_dict() == {-1: 1, 1: 1}
        assert (s - s).is_zero

    def test_negative_powers_only_for_monomials(self):
        assert LaurentPoly.monomial(2) ** -1 == LaurentPoly.monomial(-2)
        with pytest.raises(PolynomialError):
            LaurentPoly.from_poly(IntPoly((1, 1))) ** -1

    def test_substitute_sign(self):
        p = LaurentPoly.from_dict({-1: 1, 1: 1, 2: 5})
        assert p.substitute_sign().to_dict() == {-1: -1, 1: -1, 2: 5}

    def test_to_poly_and_eval(self):
        p = LaurentPoly.from_dict({-1: 2, 0: 1})
        assert not p.is_polynomial
        with pytest.raises(PolynomialError):
            p.to_poly()
        assert p.eval_int(1) == 3
        assert p.eval_int(-1) == -1
        with pytest.raises(PolynomialError):
            p.eval_int(2)


class TestSeries:
    def test_geometric_inverse(self):
        inv = series_inverse(PowerSeriesTrunc.from_poly(IntPoly((1, -1)), 6))
        assert inv.coeffs == (1,) * 7

    def test_inverse_requires_unit_constant(self):
        with pytest.raises(PolynomialError):
            series_inverse(PowerSeriesTrunc.from_poly(IntPoly((2, 1)), 4))

    @given(c=st.lists(st.integers(-5, 5), max_size=8))
    def test_inverse_times_series_is_one(self, c):
        s = PowerSeriesTrunc.from_poly(IntPoly((1,) + tuple(c)), 10)
        assert series_mul(s, series_inverse(s)) == PowerSeriesTrunc.from_poly(IntPoly.one(), 10)

    def test_truncation_and_mixed_order(self):
        a = PowerSeriesTrunc.from_poly(IntPoly((1, 1, 1)), 5)
        b = PowerSeriesTrunc.from_poly(IntPoly((1, 1)), 1)
        assert (a + b).order == 1
        with pytest.raises(PolynomialError):
            b.truncate(3)


class TestCyclotomic:
    @pytest.mark.parametrize(
        "n, coeffs",
        [
            (1, (-1, 1)),
            (2, (1, 1)),
            (3, (1, 1, 1)),
            (4, (1, 0, 1)),
            (6, (1, -1, 1)),
            (12, (1, 0, -1, 0, 1)),
        ],
    )
    def test_known_values(self, n, coeffs):
        assert cyclotomic(n) == IntPoly(coeffs)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_product_over_divisors(self, n):
        product = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic(d)
        assert product == IntPoly.monomial(n) - 1
        assert cyclotomic(n).degree == euler_phi(n)

    def test_root_of_unity_validation(self):
        with pytest.raises(PolynomialError):
            RootOfUnity(4, 2)
        with pytest.raises(PolynomialError):
            RootOfUnity(0)

    def test_power_of_root_folds(self):
        assert eval_root(IntPoly.monomial(3), RootOfUnity(3)) == CyclotomicInt.from_int(3, 1)
        i = RootOfUnity(4).as_cyclotomic()
        assert i * i == CyclotomicInt.from_int(4, -1)
        assert i * i + 1 == CyclotomicInt.from_int(4, 0)

    @given(c=st.lists(st.integers(-20, 20), max_size=15), n=st.integers(1, 12))
    def test_complex_sanity(self, c, n):
        z = RootOfUnity(n, n - 1 if n > 2 else 1)
        p = IntPoly(tuple(c))
        numeric = sum(a * z.to_complex() ** k for k, a in enumerate(p.coeffs))
        assert cmath.isclose(eval_root(p, z).to_complex(), numeric, abs_tol=1e-6)


class TestQAnalogs:
    def test_gaussian_binomial(self):
        assert q_binomial(4, 2) == IntPoly((1, 1, 2, 1, 1))
        assert q_binomial(4, 2).eval_int(2) == 35
        assert q_binomial(5, 0) == IntPoly.one()
        assert q_binomial(5, 5) == IntPoly.one()

    @pytest.mark.parametrize("n, j", [(3, 5), (2, 3), (-1, 0), (4, -1)])
    def test_gaussian_binomial_out_of_range(self, n, j):
        with pytest.raises(PolynomialError):
            q_binomial(n, j)

    def test_negative_q_integers_rejected(self):
        with pytest.raises(PolynomialError):
            q_int(-1)
        with pytest.raises(PolynomialError):
            q_factorial(-2)

    def test_pochhammer_conventions(self):
        assert pochhammer(0) == IntPoly.one()
        assert pochhammer(2) == IntPoly((1, -1, -1, 1))
        assert pochhammer_one_minus(1) == IntPoly((1, -1))
        assert pochhammer_one_minus(3) == -pochhammer(3)
