"""test_reports.py - Test cases for law-check reports."""

# Get packages.
import pytest
from dotenv import load_dotenv

# User defined modules.
from enriched_workbench.reports import (
    FAIL, PASS, UNDETERMINED, CheckResult, Report, RunReport)

# Load environment variables
load_dotenv()


#####################################################################
# Test fixtures.
@pytest.fixture
def mixed_report(svec):
    """One passing, one failing and one undetermined check."""
    report = Report("mixed")
    unit = svec.identity(svec.unit)
    report.compare("left_unit", "unit law", ["d0"], unit, unit)
    report.compare("associativity", "assoc", ["d0", "d1"], unit,
                   unit.scaled(-1))
    report.undetermined("witness_found", "search", "budget exhausted")
    return report


#####################################################################
# Test functions.
def test_verdict_order(mixed_report):
    """A failure outranks an undetermined check."""
    assert mixed_report.verdict == FAIL
    assert not mixed_report.passed
    undecided = Report("undecided")
    undecided.undetermined("x", "y", "why")
    assert undecided.verdict == UNDETERMINED
    assert Report("empty").verdict == PASS


def test_failure_witness_is_json(mixed_report):
    """Failing witnesses keep the tuple and serialised morphisms."""
    failure = mixed_report.failures()[0]
    assert failure.witness["tuple"] == ["d0", "d1"]
    assert failure.witness["left"]["domain"] == [0]


def test_passing_checks_drop_witness(mixed_report):
    """Only non-passing checks keep witnesses."""
    assert mixed_report.checks[0].witness is None


def test_unknown_status():
    """Statuses are validated."""
    with pytest.raises(ValueError):
        CheckResult("law", "anchor", "maybe")


def test_frame(mixed_report):
    """to_frame counts instances per law and status."""
    df = mixed_report.to_frame()
    assert list(df.columns) == ["law", "anchor", "status", "count"]
    assert df["count"].sum() == 3


def test_run_report_json(mixed_report):
    """A run report survives to_json/from_json."""
    run = RunReport.from_reports("validate", [mixed_report], 12, ["a note"])
    back = RunReport.from_json(run.to_json())
    assert back == run
    assert back.exit_code == 1


def test_run_report_text(mixed_report):
    """The text rendering names the verdict and non-passing checks."""
    text = RunReport.from_reports("validate", [mixed_report]).to_text()
    assert "verdict: fail" in text
    assert 'fail: associativity ["d0", "d1"]' in text


def test_passing_run():
    """An all-pass run exits with 0."""
    report = Report("ok")
    report.record("law", "anchor", True)
    assert RunReport.from_reports("validate", [report]).exit_code == 0


def test_unknown_verdict():
    """Verdicts are validated."""
    with pytest.raises(ValueError):
        RunReport("validate", "maybe")


if __name__ == "__main__":
    pytest.main()
