import json

import pytest

from zigzagsums import cli, report
from zigzagsums.report import CheckResult, VerificationReport

GOLDEN_TABLES = """\
coefficients of pi^n in S(n) and zeta(n), n = 1..10
   n  pi^-n S(n)   pi^-n zeta(n)
   1  1/4          -
   2  1/8          1/6
   3  1/32         -
   4  1/96         1/90
   5  5/1536       -
   6  1/960        1/945
   7  61/184320    -
   8  17/161280    1/9450
   9  277/8257536  -
  10  31/2903040   1/93555

Bernoulli and Euler numbers of even order
   n  B_n    E_n
   0  1      1
   2  1/6    -1
   4  -1/30  5
   6  1/42   -61
   8  -1/30  1385
  10  5/66   -

alternating permutation counts A(n) and cyclic counts A0(n), n = 1..10
   n  A(n)   A0(n)
   1  1      -
   2  1      1
   3  2      -
   4  5      4
   5  16     -
   6  61     48
   7  272    -
   8  1385   1088
   9  7936   -
  10  50521  39680
"""


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSums:
    def test_even(self, capsys):
        code, out, _ = run(capsys, "sums", "4")
        assert code == 0
        assert "1/96 · pi^4 ≈ 1.0146780316" in out
        assert "zeta(4) = 1/90 · pi^4" in out

    def test_odd(self, capsys):
        code, out, _ = run(capsys, "sums", "1")
        assert code == 0
        assert "1/4 · pi ≈ 0.785398163397" in out
        assert "L(1, chi4)" in out

    def test_divergent(self, capsys):
        code, _, err = run(capsys, "sums", "0")
        assert code == 2
        assert "diverges" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "sums", "5", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["s"] == {
            "coeff": "5/1536",
            "pi_power": 5,
            "float": pytest.approx(0.9961578280770234),
        }
        assert payload["l4"]["coeff"] == "5/1536"

    def test_digits_flag(self, capsys):
        _, out, _ = run(capsys, "sums", "4", "--digits", "4")
        assert "≈ 1.015" in out


class TestTables:
    def test_golden_bytes(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        assert out == GOLDEN_TABLES
        # spot rows called out in the contract
        assert "61/184320" in out and "1385" in out and "7936" in out

    def test_stable_across_runs(self, capsys):
        _, first, _ = run(capsys, "tables")
        _, second, _ = run(capsys, "tables")
        assert first == second

    def test_json(self, capsys):
        _, out, _ = run(capsys, "tables", "--json")
        payload = json.loads(out)
        assert payload["s_coeff"]["7"] == "61/184320"
        assert payload["euler"]["8"] == "1385"
        assert payload["zigzag"]["9"] == "7936"


class TestVolume:
    def test_exact_cyclic(self, capsys):
        code, out, _ = run(capsys, "volume", "cyclic", "2", "exact")
        assert code == 0
        assert "1/8 · pi^2" in out

    def test_extensions_chain(self, capsys):
        code, out, _ = run(capsys, "volume", "chain", "4", "extensions")
        assert code == 0
        assert "5/24" in out

    def test_exact_cyclic_odd_notes(self, capsys):
        code, out, _ = run(capsys, "volume", "cyclic", "3", "exact")
        assert code == 0
        assert "1/32 · pi^3" in out
        assert "note" in out
        code, out, _ = run(capsys, "volume", "cyclic", "3", "exact", "--quiet")
        assert code == 0 and "note" not in out

    def test_montecarlo(self, capsys):
        code, out, _ = run(
            capsys, "volume", "cyclic", "3", "montecarlo",
            "--samples", "20000", "--seed", "7",
        )
        assert code == 0
        assert "±" in out and "seed=7" in out

    def test_montecarlo_json_matches_estimate(self, capsys):
        from zigzagsums.polytope_lab import PolytopeSpec, mc_volume

        code, out, _ = run(
            capsys, "volume", "chain", "3", "montecarlo", "--json",
            "--samples", "20000", "--seed", "3",
        )
        assert code == 0
        payload = json.loads(out)
        direct = mc_volume(PolytopeSpec("chain", 3, "unit"), 20000, 3)
        assert payload == direct.as_json_dict()

    def test_spectral(self, capsys):
        code, out, _ = run(capsys, "volume", "cyclic", "2", "spectral", "--grid", "300")
        assert code == 0
        assert "1.23" in out

    def test_cube_integral(self, capsys):
        code, out, _ = run(
            capsys, "volume", "cyclic", "2", "cube-integral",
            "--samples", "20000", "--seed", "1",
        )
        assert code == 0
        assert "±" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ("volume", "chain", "11", "extensions"),
            ("volume", "cyclic", "3", "extensions"),
            ("volume", "chain", "3", "spectral"),
            ("volume", "cyclic", "1", "spectral"),
            ("volume", "chain", "2", "cube-integral"),
            ("volume", "cyclic", "1", "exact"),
        ],
    )
    def test_invalid_combinations(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert err

    def test_unknown_method_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["volume", "cyclic", "2", "quadrature"])
        assert excinfo.value.code == 2


class TestRatioLimit:
    def test_reported_rows(self, capsys):
        code, out, _ = run(capsys, "ratio-limit", "5", "--digits", "6")
        assert code == 0
        assert "39680/50521" in out
        assert "0.785416" in out

    def test_first_row_is_one(self, capsys):
        _, out, _ = run(capsys, "ratio-limit", "1")
        row = [line for line in out.splitlines() if line.strip().startswith("1 ")][0]
        assert " 1 " in row

    def test_json(self, capsys):
        _, out, _ = run(capsys, "ratio-limit", "3", "--json")
        payload = json.loads(out)
        assert payload[-1]["ratio"] == "48/61"

    def test_bad_argument(self, capsys):
        code, _, _ = run(capsys, "ratio-limit", "0")
        assert code == 2


class TestSequences:
    def test_zigzag(self, capsys):
        assert run(capsys, "zigzag", "10") == (0, "50521\n", "")

    def test_zigzag_cyclic(self, capsys):
        assert run(capsys, "zigzag", "10", "--cyclic")[1] == "39680\n"
        assert run(capsys, "zigzag", "5", "--cyclic")[0] == 2

    def test_bernoulli(self, capsys):
        assert run(capsys, "bernoulli", "10") == (0, "5/66\n", "")

    def test_euler(self, capsys):
        assert run(capsys, "euler", "8") == (0, "1385\n", "")
        assert run(capsys, "euler", "7")[0] == 2


class TestGEval:
    def test_agreement(self, capsys):
        code, out, _ = run(capsys, "g-eval", "0.5")
        assert code == 0
        assert "closed = 0.948059448969" in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "g-eval", "-0.5", "--terms", "60", "--json")
        payload = json.loads(out)
        assert payload["abs_diff"] < 1e-12

    def test_pole(self, capsys):
        assert run(capsys, "g-eval", "1.0")[0] == 2


class TestSpectrum:
    def test_report_lists_exact_values(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--grid", "200", "--top", "3")
        assert code == 0
        assert "exact 1/(4k+1)" in out
        assert "-0.333333333333" in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--grid", "200", "--top", "2", "--json")
        payload = json.loads(out)
        assert [e["k"] for e in payload["eigenvalues"]] == [0, -1]
        assert payload["eigenvalues"][0]["abs_error"] < 0.01


class TestVerify:
    def test_exact_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "exact", "--quiet")
        assert code == 0
        assert out.strip().endswith("0 failed")

    def test_json_round_trip_and_determinism(self, capsys):
        code, first, _ = run(capsys, "verify", "numeric", "--json", "--seed", "42")
        assert code == 0
        _, second, _ = run(capsys, "verify", "numeric", "--json", "--seed", "42")
        assert first == second
        parsed = VerificationReport.from_json(first)
        assert parsed.to_json() == first.rstrip("\n")

    def test_failure_exit_code(self, capsys, monkeypatch):
        failing = VerificationReport(
            checks=[CheckResult("x", "broken", "fail", "1", "2", "exact")]
        )
        monkeypatch.setattr(report, "run_suite", lambda **kwargs: failing)
        code, out, _ = run(capsys, "verify", "all")
        assert code == 1
        assert "[FAIL]" in out

    def test_unknown_suite_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["verify", "bogus"])
        assert excinfo.value.code == 2


class TestConfigFile:
    def test_config_sets_defaults_and_flags_override(self, capsys, tmp_path, monkeypatch):
        config = tmp_path / "settings.cfg"
        config.write_text("# comment\ndigits=4\nseed=9\n")
        monkeypatch.setenv(cli.CONFIG_ENV, str(config))
        _, out, _ = run(capsys, "sums", "4")
        assert "≈ 1.015" in out
        _, out, _ = run(capsys, "sums", "4", "--digits", "7")
        assert "≈ 1.014678" in out

    def test_missing_config_is_fatal(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.CONFIG_ENV, str(tmp_path / "absent.cfg"))
        with pytest.raises(SystemExit):
            cli.main(["sums", "4"])


class TestParser:
    def test_missing_command(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main([])
        assert excinfo.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["--version"])
        assert excinfo.value.code == 0
