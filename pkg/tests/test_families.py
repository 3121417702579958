import pytest
from hypothesis import given
from hypothesis import strategies as st

from fzeta.core import Claim, EvalPointConvention, FamilyKind, Sign, Verdict
from fzeta.exactpoly import IntPoly
from fzeta.families import (
    FamilySpec,
    carlitz_class,
    carlitz_product_class,
    condition62_dual_report,
    default_cutoff,
    gl_class,
    gl_count,
    ind_spec,
    kontsevich_constructible_report,
    kontsevich_pair_identity,
    kontsevich_pair_report,
    numeric_aside_report,
    primary_claim,
    primary_mismatches,
    secondary_claim,
    secondary_mismatches,
    sigma_series_expansion,
    sigma_star_pair_class,
    sigma_star_series_expansion,
    sign_table,
    statement_cutoff,
)

N_VALUES = list(range(1, 17))


def values(kind, n_values, **kwargs):
    return [row.value for row in sign_table(FamilySpec(kind, **kwargs), n_values)]


class TestGenerators:
    @given(m=st.integers(0, 6), q=st.integers(2, 9))
    def test_gl_class_counts_points(self, m, q):
        assert gl_class(m).to_poly().eval_int(q) == gl_count(m, q)

    @pytest.mark.parametrize("m", range(0, 7))
    def test_carlitz_product_variety(self, m):
        assert carlitz_product_class(m) == carlitz_class(m)

    def test_small_classes(self):
        assert gl_class(0).to_poly() == IntPoly.one()
        assert gl_class(2).to_poly() == IntPoly((0, 1, -1, -1, 1))
        assert carlitz_class(1).to_poly() == IntPoly((0, -1, 0, 1))

    def test_kontsevich_partial_sum(self):
        assert FamilySpec(FamilyKind.KONTSEVICH).partial_sum(2) == IntPoly((3, -2, -1, 1))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_gl_ind_variety_matches_partial_sum(self, n):
        spec = FamilySpec(FamilyKind.GL)
        direct = IntPoly.zero()
        for m in range(n):
            direct = direct + gl_class(m).to_poly()
        assert ind_spec(FamilyKind.GL).partial_sum(n) == direct == spec.partial_sum(n - 1)

    def test_cutoffs(self):
        assert default_cutoff(FamilyKind.GL, 3) == 2
        assert statement_cutoff(FamilyKind.GL, 3) == 3
        assert default_cutoff(FamilyKind.CARLITZ, 4) == 1
        assert default_cutoff(FamilyKind.SIGMA_STAR, 5) == 4
        assert default_cutoff(FamilyKind.SIGMA, 3) == 3
        spec = FamilySpec(FamilyKind.GL, cutoff_rule=lambda n: 0)
        assert spec.sign_cutoff(10) == 0


class TestSignTables:
    def test_gl_values(self):
        assert values(FamilyKind.GL, [1, 2, 3]) == [1, -1, 16]

    def test_carlitz_values(self):
        assert values(FamilyKind.CARLITZ, [1, 2, 3, 4]) == [1, 1, 715, -23]

    def test_sigma_values(self):
        assert values(FamilyKind.SIGMA, [1, 2, 3, 4]) == [1, -2, 59, 73402]

    def test_sigma_star_sign_conventions(self):
        assert values(FamilyKind.SIGMA_STAR, [1, 2, 4]) == [0, 2, 150]
        assert values(FamilyKind.SIGMA_STAR, [2, 3, 4], alternating=False) == [-2, -700, 138]

    def test_statement_truncation_for_gl(self):
        literal = FamilySpec(
            FamilyKind.GL, cutoff_rule=lambda n: statement_cutoff(FamilyKind.GL, n)
        )
        row = sign_table(literal, [3])[0]
        assert row.cutoff == 3
        assert row.value == -632
        assert row.match is False

    @pytest.mark.parametrize(
        "kind", [FamilyKind.GL, FamilyKind.CARLITZ, FamilyKind.SIGMA, FamilyKind.SIGMA_STAR]
    )
    def test_primary_claims_hold(self, kind):
        assert primary_mismatches(sign_table(FamilySpec(kind), N_VALUES)) == []

    @pytest.mark.parametrize("kind", [FamilyKind.GL, FamilyKind.CARLITZ, FamilyKind.SIGMA])
    def test_secondary_claims_hold(self, kind):
        assert secondary_mismatches(sign_table(FamilySpec(kind), N_VALUES)) == []

    def test_sigma_star_secondary_claims_use_unsigned_terms(self):
        rows = sign_table(FamilySpec(FamilyKind.SIGMA_STAR, alternating=False), N_VALUES)
        assert secondary_mismatches(rows) == []

    def test_row_fields(self):
        row = sign_table(FamilySpec(FamilyKind.GL), [2])[0]
        assert row.eval_point == -1
        assert row.sign is Sign.NEGATIVE
        assert row.claimed_sign is Claim.UNCLAIMED
        assert row.match is None
        assert row.secondary_claim is Claim.NEGATIVE
        assert row.secondary_match is True

    def test_threads_keep_order(self):
        spec = FamilySpec(FamilyKind.CARLITZ)
        assert sign_table(spec, N_VALUES, threads=4) == sign_table(spec, N_VALUES, threads=1)

    def test_minus_n_convention(self):
        row = sign_table(FamilySpec(FamilyKind.GL), [2], convention=EvalPointConvention.MINUS_N)[0]
        assert row.eval_point == -2
        assert row.value == -2

    def test_empty_table(self):
        assert sign_table(FamilySpec(FamilyKind.GL), []) == []

    def test_claims(self):
        assert primary_claim(FamilyKind.SIGMA, 1) is Claim.NONNEGATIVE
        assert primary_claim(FamilyKind.SIGMA, 2) is Claim.UNCLAIMED
        assert secondary_claim(FamilyKind.SIGMA, 2) is Claim.NEGATIVE
        assert primary_claim(FamilyKind.CARLITZ, 6) is Claim.NONNEGATIVE
        assert secondary_claim(FamilyKind.CARLITZ, 8) is Claim.NEGATIVE
        assert primary_claim(FamilyKind.SIGMA_STAR, 8) is Claim.NONNEGATIVE
        assert primary_claim(FamilyKind.KONTSEVICH, 3) is Claim.UNCLAIMED


class TestReports:
    def test_two_evaluation_points(self):
        entry = condition62_dual_report(FamilySpec(FamilyKind.GL), [2])[0]
        assert entry["value_one_minus_n"] == "-1"
        assert entry["value_minus_n"] == "-2"
        assert entry["signs_agree"] is True

    def test_numeric_asides(self):
        agrees = {
            (a["family"], a["n"], a["description"]): a["agrees"] for a in numeric_aside_report()
        }
        assert agrees[("sigma", 1, "sigma(1-n) at n=1")] is False
        assert agrees[("sigma", 2, "sigma(1-n) at n=2")] is True
        assert agrees[("sigma-star", 2, "sigma*(1-n) at n=2, displayed signs")] is False
        assert agrees[("sigma-star", 2, "sigma*(1-n) at n=2, unsigned terms")] is True


class TestIdentities:
    @pytest.mark.parametrize("k", range(1, 26))
    def test_kontsevich_pairs(self, k):
        assert kontsevich_pair_identity(k)
        assert not kontsevich_pair_identity(k, mutate=True)

    def test_kontsevich_pair_class_is_not_torified(self):
        report = kontsevich_pair_report(1)
        assert report.verdict is Verdict.FAILS
        assert report.witness == {"group": "pair 1", "k": 1, "coefficient": -1}

    def test_kontsevich_aggregate(self):
        report = kontsevich_constructible_report(4)
        assert report.verdict is Verdict.FAILS
        assert report.witness["k"] == 1
        assert report.witness["coefficient"] == -1

    def test_sigma_series(self):
        assert sigma_series_expansion(8).coeffs == (1, 1, -1, 2, -2, 1, 0, 1, -2)

    def test_sigma_star_series(self):
        assert sigma_star_series_expansion(10).coeffs == (0, -2, -2, -2, 0, 0, 0, 2, 2, 0, 2)

    @pytest.mark.parametrize("ell", range(1, 5))
    def test_sigma_star_pair_constant_term(self, ell):
        report = sigma_star_pair_class(ell)
        assert report.diff == {0: -1}
        assert report.computed[1] == 4 * ell
        assert report.difference_identity
