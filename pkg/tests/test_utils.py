import csv
import json

import pytest
from pydantic import ValidationError

from fzeta.core import (
    SIGN_TABLE_CSV_HEADER,
    CheckResult,
    Claim,
    ConditionId,
    ConditionReport,
    EvalPointConvention,
    FamilyKind,
    ParseError,
    RunManifest,
    Sign,
    SignTableRow,
    Verdict,
)
from fzeta.exactpoly import IntPoly
from fzeta.utils import (
    Timer,
    dumps_canonical,
    init_metrics,
    int_map_to_json,
    log_metric,
    stringify_big_ints,
    strip_volatile,
)
from fzeta.utils.text import format_poly, parse_int_matrix, parse_int_set, parse_laurent, parse_poly


class TestPolynomialText:
    def test_sparse_and_dense_agree(self):
        assert parse_poly("0:1;2:-1") == IntPoly((1, 0, -1))
        assert parse_poly("1,0,-1") == IntPoly((1, 0, -1))
        assert parse_poly(" 0:1 ; 2:-1 ") == IntPoly((1, 0, -1))

    def test_repeated_exponents_accumulate(self):
        assert parse_poly("1:2;1:3") == IntPoly.monomial(1, 5)

    @pytest.mark.parametrize("text", ["", "a:1", "1:2:3", "1:x", "1,,2", "-1:1"])
    def test_invalid_polynomials(self, text):
        with pytest.raises(ParseError):
            parse_poly(text)

    def test_laurent_accepts_negative_exponents(self):
        p = parse_laurent("-2:1;0:3")
        assert p.coeff(-2) == 1
        assert p.coeff(0) == 3
        assert p.min_exponent == -2

    def test_format_is_canonical(self):
        assert format_poly(parse_poly("2:-1;0:1")) == "0:1;2:-1"
        assert format_poly(IntPoly.zero()) == "0"
        assert parse_poly(format_poly(IntPoly((3, 0, -7, 1)))) == IntPoly((3, 0, -7, 1))
        assert format_poly(parse_laurent("-1:2;3:1")) == "-1:2;3:1"


class TestIntegerSets:
    def test_ranges(self):
        assert parse_int_set("1,3-5,10") == [1, 3, 4, 5, 10]
        assert parse_int_set("5-3") == [3, 4, 5]
        assert parse_int_set("") == []

    def test_bounds(self):
        with pytest.raises(ParseError):
            parse_int_set("0-3")
        with pytest.raises(ParseError):
            parse_int_set("1-50", hi=40)
        assert parse_int_set("-2--1", lo=-5) == [-2, -1]

    def test_matrix(self):
        assert parse_int_matrix("0,1;-1,0") == ((0, 1), (-1, 0))
        with pytest.raises(ParseError):
            parse_int_matrix("1,2;3")
        with pytest.raises(ParseError):
            parse_int_matrix("1,2,3;4,5,6")


class TestJson:
    def test_big_ints_become_strings(self):
        data = {"a": 2**60, "b": 5, "c": True, "d": [-(2**70), 1]}
        expected = {"a": str(2**60), "b": 5, "c": True, "d": [str(-(2**70)), 1]}
        assert stringify_big_ints(data) == expected

    def test_structural_ints_switch_at_double_precision(self):
        edge = 2**53 - 1
        assert stringify_big_ints([edge, -edge]) == [edge, -edge]
        assert stringify_big_ints([edge + 1, -(edge + 1)]) == [str(edge + 1), str(-(edge + 1))]

    def test_report_values_are_strings_regardless_of_size(self):
        report = ConditionReport(
            condition=ConditionId.MOTIVIC_F1,
            verdict=Verdict.HOLDS,
            certificate={"torification": int_map_to_json({0: 3, 1: 3, 2: 1})},
        )
        torification = report.to_json_dict()["certificate"]["torification"]
        assert torification == {"0": "3", "1": "3", "2": "1"}

    def test_canonical_dump_is_sorted(self):
        assert dumps_canonical({"b": 1, "a": 2}, indent=None) == '{"a": 2, "b": 1}'

    def test_strip_volatile(self):
        data = {"timestamp": "x", "checks": [{"name": "a", "wall_ms": 3}]}
        assert strip_volatile(data) == {"checks": [{"name": "a"}]}


class TestMetrics:
    def test_rows_written_after_header(self, tmp_path):
        path = tmp_path / "metrics.csv"
        init_metrics(str(path))
        log_metric("prop77-pairing", 12, 25, "pass")
        with open(path, encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["ts", "check", "duration_ms", "count", "verdict", "info"]
        assert rows[1][1:5] == ["prop77-pairing", "12", "25", "pass"]

    def test_disabled_without_path(self, tmp_path):
        init_metrics(None)
        log_metric("ignored")
        assert list(tmp_path.iterdir()) == []

    def test_timer(self):
        assert Timer().ms() >= 0


class TestTypes:
    def test_eval_points(self):
        assert EvalPointConvention.ONE_MINUS_N.point(3) == -2
        assert EvalPointConvention.MINUS_N.point(3) == -3

    def test_sign_and_claims(self):
        assert Sign.of(-4) is Sign.NEGATIVE
        assert Sign.of(0) is Sign.ZERO
        assert Claim.NONNEGATIVE.matches(0) is True
        assert Claim.NEGATIVE.matches(0) is False
        assert Claim.UNCLAIMED.matches(7) is None


class TestModels:
    def test_fails_requires_witness(self):
        with pytest.raises(ValidationError):
            ConditionReport(condition=ConditionId.MOTIVIC_F1, verdict=Verdict.FAILS)

    def test_report_json_drops_empty_fields(self):
        report = ConditionReport(
            condition=ConditionId.MOTIVIC_F1, verdict=Verdict.HOLDS, bound=2**60
        )
        data = report.to_json_dict()
        assert data["bound"] == str(2**60)
        assert "witness" not in data
        assert data["verdict"] == "holds"

    def test_sign_table_row(self):
        row = SignTableRow.build(
            family=FamilyKind.SIGMA,
            n=4,
            cutoff=4,
            eval_point=-3,
            value=10**30,
            claimed=Claim.NONNEGATIVE,
        )
        assert row.sign is Sign.POSITIVE
        assert row.match is True
        assert row.model_dump(mode="json")["value"] == str(10**30)
        assert row.csv_row() == ["4", "-3", str(10**30), "+", ">=0", "true"]
        assert len(row.csv_row()) == len(SIGN_TABLE_CSV_HEADER)

    def test_sign_table_row_with_thousands_of_digits(self):
        value = -(7**6000)
        row = SignTableRow.build(
            family=FamilyKind.CARLITZ,
            n=40,
            cutoff=19,
            eval_point=-39,
            value=value,
            claimed=Claim.UNCLAIMED,
        )
        dumped = row.model_dump(mode="json")["value"]
        assert len(dumped) > 5000
        assert int(dumped) == value

    def test_sign_table_row_rejects_inconsistent_sign(self):
        with pytest.raises(ValidationError):
            SignTableRow(
                family=FamilyKind.GL,
                n=2,
                cutoff=1,
                eval_point=-1,
                value=-1,
                sign=Sign.POSITIVE,
                claimed_sign=Claim.UNCLAIMED,
            )

    def test_manifest_ignores_informational_failures(self):
        manifest = RunManifest(
            command=["fzeta", "verify", "lemma76"],
            versions={},
            timestamp="2026-01-01T00:00:00+00:00",
            checks=[
                CheckResult(name="a", passed=True),
                CheckResult(name="b", passed=False, informational=True),
            ],
        )
        assert manifest.overall == "pass"
        assert manifest.to_json_dict()["overall"] == "pass"
        manifest.checks.append(CheckResult(name="c", passed=False))
        assert manifest.overall == "fail"
        json.dumps(manifest.to_json_dict())
