import json

from zigzagsums.report import (
    CheckResult,
    SUITES,
    VerificationReport,
    run_suite,
)


class TestReportStructure:
    def test_exact_suite_passes(self):
        report = run_suite("exact")
        assert report.all_passed()
        assert report.summary["failed"] == 0
        assert report.summary["passed"] == len(report.checks)

    def test_check_ids_unique(self):
        report = run_suite("exact")
        ids = [c.id for c in report.checks]
        assert len(ids) == len(set(ids))

    def test_metadata_carries_parameters_and_notes(self):
        report = run_suite("numeric", seed=5, samples=12345, grid=321)
        assert report.metadata["seed"] == 5
        assert report.metadata["samples"] == 12345
        assert report.metadata["grid"] == 321
        assert len(report.metadata["notes"]) == 3
        assert any("Bernoulli" in note for note in report.metadata["notes"])
        assert any("power-sum" in note for note in report.metadata["notes"])

    def test_unknown_suite(self):
        import pytest

        with pytest.raises(ValueError):
            run_suite("everything")

    def test_suite_names(self):
        assert SUITES == ("exact", "numeric", "montecarlo", "spectral", "all")


class TestSerialization:
    def test_json_round_trip(self):
        report = run_suite("exact")
        again = VerificationReport.from_json(report.to_json())
        assert again == report
        assert again.summary == report.summary

    def test_deterministic_bytes(self):
        first = run_suite("numeric", seed=4)
        second = run_suite("numeric", seed=4)
        assert first.to_json() == second.to_json()

    def test_summary_counts_fail(self):
        report = VerificationReport(
            checks=[
                CheckResult("a", "ok", "pass", "1", "1", "exact"),
                CheckResult("b", "broken", "fail", "1", "2", "exact"),
            ]
        )
        assert not report.all_passed()
        assert report.summary == {"passed": 1, "failed": 1}
        text = report.render_text()
        assert "[FAIL] b" in text and text.endswith("1 passed, 1 failed")
        assert report.render_text(quiet=True) == "1 passed, 1 failed"

    def test_parsed_json_shape(self):
        payload = json.loads(run_suite("numeric").to_json())
        assert set(payload) == {"checks", "summary", "metadata"}
        for check in payload["checks"]:
            assert set(check) == {
                "id",
                "description",
                "status",
                "expected",
                "actual",
                "tolerance",
            }


class TestMonteCarloSuite:
    def test_small_run_passes_without_retry(self):
        report = run_suite("montecarlo", seed=0, samples=50000)
        assert report.all_passed()
        assert report.metadata["montecarlo_retried"] is False


class TestSpectralSuite:
    def test_passes_at_reduced_grid(self):
        report = run_suite("spectral", grid=400)
        assert report.all_passed()
        ids = {c.id for c in report.checks}
        assert "spectral.multiplicity" in ids
        assert "spectral.spectral_sum.3" in ids
