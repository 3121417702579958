import json

import pytest

from fzeta import __version__
from fzeta.cli import app, main, verify
from fzeta.cli.app import EXIT_FAILS, EXIT_OK, EXIT_UNDETERMINED, EXIT_USAGE
from fzeta.cli.verify import run_check
from fzeta.core import ConditionId, ConditionReport, Verdict
from fzeta.core.config import DEFAULT_NMAX

P2 = "0:1;1:1;2:1"


def run_json(capsys, *argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


class TestCheck:
    def test_holds(self, capsys):
        code, out = run_json(capsys, "check", "--cond", "motivic-f1", "--poly", P2)
        assert code == EXIT_OK
        assert out["verdict"] == "holds"
        assert out["certificate"]["torification"] == {"0": "3", "1": "3", "2": "1"}

    def test_fails(self, capsys):
        code, out = run_json(capsys, "check", "--cond", "counting-f1", "--poly", "0:-3;1:1")
        assert code == EXIT_FAILS
        assert out["witness"]["x"] == [1, 2]

    def test_undetermined(self, capsys):
        argv = [
            "check", "--cond", "partial-eval", "--n", "2",
            "--poly", "0:3;1:-1;2:-3;3:1", "--split-b", "0", "--split-p", "0:-3;1:1",
        ]
        code, out = run_json(capsys, *argv)
        assert code == EXIT_UNDETERMINED
        assert out["verdict"] == "undetermined"

    def test_text_output(self, capsys):
        assert main(["check", "--cond", "dual-torification", "--poly", "1:1"]) == EXIT_FAILS
        out = capsys.readouterr().out
        assert out.startswith("dual-torification: fails")
        assert '"stage": "dual"' in out

    def test_ind_fzeta(self, capsys):
        code, out = run_json(capsys, "check", "--cond", "ind-fzeta", "--family", "gl", "--n", "3")
        assert code == EXIT_OK
        assert out["details"]["eval_point"] == -2

    def test_missing_argument(self, capsys):
        assert main(["check", "--cond", "eval-fzeta", "--poly", P2]) == EXIT_USAGE

    def test_bad_polynomial(self, capsys):
        assert main(["check", "--cond", "motivic-f1", "--poly", "x^2"]) == EXIT_USAGE


class TestUsage:
    def test_unknown_option(self, capsys):
        assert main(["check", "--nope"]) == EXIT_USAGE

    def test_help_and_version(self, capsys):
        assert main(["--help"]) == EXIT_OK
        assert main(["--version"]) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_invalid_report_is_usage_error(self, monkeypatch):
        def broken(args):
            return ConditionReport(condition=ConditionId.MOTIVIC_F1, verdict=Verdict.FAILS)

        monkeypatch.setattr(app, "cmd_class", broken)
        assert main(["class", "--poly", P2]) == EXIT_USAGE


class TestCommands:
    def test_habiro_invert(self, capsys):
        code, out = run_json(capsys, "habiro", "invert-L", "--level", "5")
        assert code == EXIT_OK
        assert out["verified"] is True

    def test_habiro_eval_n(self, capsys):
        _, out = run_json(capsys, "habiro", "eval-n", "--level", "3", "--poly", "3:1", "--n", "2")
        assert out["residue"] == "1:1"

    def test_habiro_add_projects_to_lower_level(self, capsys):
        argv = ["habiro", "add", "--level", "3", "--poly", "2:1", "--other", "0:1"]
        code, out = run_json(capsys, *argv, "--other-level", "2", "--project")
        assert code == EXIT_OK
        assert out["result"] == {"level": 2, "rep": "0:1;2:1"}

    def test_habiro_mul(self, capsys):
        argv = ["habiro", "mul", "--level", "3", "--poly", "1:1", "--other", "1:1"]
        _, out = run_json(capsys, *argv)
        assert out["result"] == {"level": 3, "rep": "2:1"}
        _, out = run_json(capsys, *argv, "--other-level", "1", "--project")
        assert out["result"] == {"level": 1, "rep": "0:1"}

    def test_habiro_level_mismatch_without_projection(self, capsys):
        argv = ["habiro", "add", "--level", "3", "--other-level", "2"]
        assert main(argv) == EXIT_USAGE

    def test_class(self, capsys):
        _, out = run_json(capsys, "class", "--poly", P2)
        assert out["torus_basis"] == {"0": "3", "1": "3", "2": "1"}
        assert out["cells"] == {"0": "1", "1": "1", "2": "1"}

    def test_tate_root_witness(self, capsys):
        code, out = run_json(capsys, "tate", "root", "--poly", "0:-2;1:1", "--n", "2")
        assert code == EXIT_FAILS
        assert out["witness"] == {"exponent": 0, "coefficient": -2}

    def test_tate_integral(self, capsys):
        code, out = run_json(capsys, "tate", "integral", "--poly", "1:1", "--n", "2")
        assert code == EXIT_FAILS
        assert out["witness_exponent"] == 1

    def test_sign_table_json(self, capsys):
        code, rows = run_json(capsys, "family", "sign-table", "--kind", "gl", "--n", "1-3")
        assert code == EXIT_OK
        assert [r["value"] for r in rows] == ["1", "-1", "16"]

    def test_sign_table_csv(self, capsys):
        assert main(["--csv", "family", "sign-table", "--kind", "carlitz", "--n", "1-4"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,eval_point,value,sign,claimed,match"
        assert len(lines) == 5
        assert lines[1].split(",")[:2] == ["1", "0"]

    def test_sign_table_with_thousands_of_digits(self, capsys):
        code, rows = run_json(capsys, "family", "sign-table", "--kind", "carlitz", "--n", "38-40")
        assert code == EXIT_OK
        assert [r["n"] for r in rows] == [38, 39, 40]
        assert max(len(r["value"]) for r in rows) > 4300

    def test_series(self, capsys):
        _, out = run_json(capsys, "family", "series", "--kind", "sigma", "--order", "8")
        assert out["coefficients"] == ["1", "1", "-1", "2", "-2", "1", "0", "1", "-2"]

    def test_oracle_text(self, capsys):
        assert main(["oracle", "gl", "--p", "3", "--m", "2"]) == EXIT_OK
        first = capsys.readouterr().out.splitlines()[0]
        assert first == "48"

    def test_oracle_symplectic(self, capsys):
        code, out = run_json(capsys, "oracle", "mateq", "--p", "5")
        assert code == EXIT_OK
        assert out["count"] == 120
        assert out["agrees"] is True

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "grass.json"
        argv = ["--out", str(target), "oracle", "grass", "--p", "2", "--n", "4", "--j", "2"]
        assert main(argv) == EXIT_OK
        assert json.loads(target.read_text(encoding="utf-8"))["count"] == 35


class TestVerify:
    def test_informational_discrepancy_does_not_fail(self, capsys):
        code, manifest = run_json(capsys, "verify", "lemma76", "--lmax", "2")
        assert code == EXIT_OK
        assert manifest["overall"] == "pass"
        assert any(c["informational"] for c in manifest["checks"])

    def test_series_target(self, capsys):
        code, manifest = run_json(capsys, "verify", "series-sigma", "--order", "12")
        assert code == EXIT_OK
        assert manifest["versions"]["fzeta"] == __version__

    @pytest.mark.slow
    def test_family_target(self, capsys):
        code, manifest = run_json(capsys, "verify", "prop71", "--nmax", "12", "--level-max", "5")
        assert code == EXIT_OK
        names = {c["name"] for c in manifest["checks"]}
        assert "prop71-primary" in names

    @pytest.mark.slow
    def test_carlitz_target_at_default_range(self, capsys):
        code, manifest = run_json(capsys, "verify", "prop73")
        assert code == EXIT_OK
        primary = next(c for c in manifest["checks"] if c["name"] == "prop73-primary")
        assert len(primary["details"]["rows"]) == DEFAULT_NMAX

    def test_shared_checks_listed_once(self, monkeypatch):
        def shared(opts):
            return [run_check("shared", lambda: (True, 1, {}))]

        def own(opts):
            return shared(opts) + [run_check("own", lambda: (True, 1, {}))]

        monkeypatch.setattr(verify, "TARGETS", {"first": own, "second": shared})
        manifest = verify.run_verify("all", verify.VerifyOptions(), ["verify", "all"])
        assert [c.name for c in manifest.checks] == ["shared", "own"]

    @pytest.mark.slow
    def test_all_targets(self, capsys):
        argv = [
            "verify", "all", "--nmax", "8", "--kmax", "3", "--lmax", "1",
            "--level-max", "4", "--samples", "10", "--order", "12",
        ]
        code, manifest = run_json(capsys, *argv)
        names = [c["name"] for c in manifest["checks"]]
        assert len(names) == len(set(names))
        assert code == EXIT_OK
