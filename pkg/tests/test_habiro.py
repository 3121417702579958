import pytest
from hypothesis import given
from hypothesis import strategies as st

from fzeta.core import LevelMismatchError, TruncationLevelError, Verdict
from fzeta.exactpoly import CyclotomicInt, IntPoly, RootOfUnity, divrem_unit, eval_root
from fzeta.habiro import (
    HabiroElement,
    IndVarietySpec,
    check_constructible_f1,
    check_ind_f1,
    check_ind_fzeta,
    ev_n,
    ev_zeta,
    frobenius,
    habiro_add,
    habiro_mul,
    inverse_identity_defect,
    inverse_lefschetz,
    make,
    normal_form,
    taylor_zeta,
)

Q = IntPoly.q()

polys = st.lists(st.integers(-20, 20), max_size=25).map(lambda c: IntPoly(tuple(c)))
levels = st.integers(1, 6)


class TestQuotient:
    def test_reduction(self):
        assert make(1, IntPoly.monomial(2)).rep == IntPoly.one()
        assert make(2, IntPoly.monomial(2)).rep == IntPoly.monomial(2)

    def test_level_must_be_positive(self):
        with pytest.raises(TruncationLevelError):
            HabiroElement(0, Q)

    def test_level_mismatch(self):
        a, b = HabiroElement.q(3), HabiroElement.q(4)
        with pytest.raises(LevelMismatchError):
            a + b
        with pytest.raises(LevelMismatchError):
            habiro_mul(a, b)
        assert habiro_add(a, b, project=True).level == 3

    def test_projection_only_downwards(self):
        a = HabiroElement.q(2)
        assert a.project(1).rep == IntPoly.one()
        with pytest.raises(TruncationLevelError):
            a.project(3)

    @given(p=polys, r=polys, level=levels)
    def test_ring_operations_respect_reduction(self, p, r, level):
        a, b = make(level, p), make(level, r)
        assert (a * b) == make(level, p * r)
        assert (a - b) == make(level, p - r)

    @given(p=polys, level=st.integers(2, 6))
    def test_projection_commutes_with_reduction(self, p, level):
        assert make(level, p).project(level - 1) == make(level - 1, p)


class TestNormalForm:
    def test_square_at_level_two(self):
        nf = normal_form(make(2, IntPoly.monomial(2)))
        assert nf.coeff_polys == (IntPoly.one(), IntPoly((1, 1)))
        assert nf.to_json(one_minus_q=True) == {"a": ["0:1", "0:-1;1:-1"], "convention": "1-q"}

    @given(p=polys, level=levels)
    def test_reconstruction(self, p, level):
        a = make(level, p)
        nf = normal_form(a)
        assert nf.level == level
        assert nf.reconstruct() == a.rep
        assert all(c.degree <= m for m, c in enumerate(nf.coeff_polys))


class TestEvaluations:
    @given(p=polys, level=levels, data=st.data())
    def test_ev_n_matches_direct_reduction(self, p, level, data):
        n = data.draw(st.integers(1, level))
        assert ev_n(make(level, p), n) == divrem_unit(p, IntPoly.monomial(n) - 1)[1]

    def test_ev_n_examples(self):
        assert ev_n(make(3, IntPoly.monomial(3)), 2) == Q
        with pytest.raises(TruncationLevelError):
            ev_n(make(3, Q), 4)

    @given(p=polys, level=levels, data=st.data())
    def test_ev_zeta_matches_polynomial(self, p, level, data):
        order = data.draw(st.integers(1, level))
        z = RootOfUnity(order)
        assert ev_zeta(make(level, p), z) == eval_root(p, z)

    def test_ev_zeta_at_minus_one(self):
        assert ev_zeta(HabiroElement.q(2), RootOfUnity(2)) == CyclotomicInt.from_int(2, -1)
        with pytest.raises(TruncationLevelError):
            ev_zeta(HabiroElement.q(2), RootOfUnity(3))

    @pytest.mark.parametrize("order", [1, 2, 3, 4])
    def test_taylor_of_q(self, order):
        z = RootOfUnity(order)
        coeffs = taylor_zeta(HabiroElement.q(2 * order), z, 2)
        assert coeffs == [z.as_cyclotomic(), CyclotomicInt.from_int(order, 1)]

    def test_taylor_depth_limited_by_level(self):
        with pytest.raises(TruncationLevelError):
            taylor_zeta(HabiroElement.q(2), RootOfUnity(2), 2)

    @given(p=polys, r=polys, data=st.data())
    def test_taylor_of_product_is_cauchy_product(self, p, r, data):
        order = data.draw(st.integers(1, 3))
        level = data.draw(st.integers(order, 3 * order))
        z, K = RootOfUnity(order), level // order
        a, b = make(level, p), make(level, r)
        ta, tb = taylor_zeta(a, z, K), taylor_zeta(b, z, K)
        zero = CyclotomicInt.from_int(order, 0)
        expected = [sum((ta[i] * tb[k - i] for i in range(k + 1)), zero) for k in range(K)]
        assert taylor_zeta(a * b, z, K) == expected
        assert ta[0] == ev_zeta(a, z)

    def test_taylor_cauchy_rule_at_minus_one(self):
        z = RootOfUnity(2)
        a, b = make(6, IntPoly((1, 2, 0, -1))), make(6, IntPoly((3, 0, 1)))
        ta, tb = taylor_zeta(a, z, 3), taylor_zeta(b, z, 3)
        product = taylor_zeta(a * b, z, 3)
        assert product[2] == ta[0] * tb[2] + ta[1] * tb[1] + ta[2] * tb[0]

    @given(p=polys, r=polys, level=levels, data=st.data())
    def test_evaluations_are_additive(self, p, r, level, data):
        z = RootOfUnity(data.draw(st.integers(1, level)))
        n = data.draw(st.integers(1, 4))
        a, b = make(level, p), make(level, r)
        assert ev_zeta(a + b, z) == ev_zeta(a, z) + ev_zeta(b, z)
        assert frobenius(a + b, n) == frobenius(a, n) + frobenius(b, n)

    @given(p=polys, level=levels, n=st.integers(1, 4))
    def test_frobenius(self, p, level, n):
        a = frobenius(make(level, p), n)
        assert a == make(level, p.substitute_power(n))
        assert ev_n(a, 1) == ev_n(make(level, p), 1)


class TestInverseLefschetz:
    @pytest.mark.parametrize("level", range(1, 11))
    def test_inverse(self, level):
        inv = inverse_lefschetz(level)
        assert HabiroElement.q(level) * inv == HabiroElement.one(level)
        assert inverse_identity_defect(level).is_zero

    def test_literal_convention_defect(self):
        assert inverse_identity_defect(2, one_minus_q=False) == IntPoly((-2, 2))


class TestIndVarieties:
    def test_partial_sums(self):
        spec = IndVarietySpec.from_list("point", [IntPoly.one()])
        assert spec.partial_sum(3) == IntPoly.one()
        assert spec.habiro_element(2).rep == IntPoly.one()
        assert check_ind_f1(spec, 3).holds

    def test_f1_witness(self):
        spec = IndVarietySpec.from_list("shifted", [IntPoly.one(), Q - 3])
        report = check_ind_f1(spec, 2)
        assert report.verdict is Verdict.FAILS
        assert report.witness == {"m": 1, "k": 0, "coefficient": -2}

    def test_fzeta_sign(self):
        spec = IndVarietySpec("ones", lambda m: IntPoly.one())
        assert check_ind_fzeta(spec, 1).holds
        report = check_ind_fzeta(spec, 2)
        assert report.verdict is Verdict.FAILS
        assert report.witness == {"eval_point": -1, "value": "-1"}
        assert report.details["alternate_value"] == "-2"
        minus_n = check_ind_fzeta(spec, 2, convention="minus-n")
        assert minus_n.details["eval_point"] == -2

    def test_constructible(self):
        groups = [[Q - 2, IntPoly.constant(2)], [Q - 2]]
        report = check_constructible_f1(groups, labels=["paired", "alone"])
        assert report.verdict is Verdict.FAILS
        assert report.witness == {"group": "alone", "k": 0, "coefficient": -1}
        assert check_constructible_f1(groups[:1]).holds
