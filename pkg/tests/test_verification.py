import pytest

from doily_model import DoilyModel
from models import Check, VerificationReport
from verification import CHECKS, check, format_check, format_report, run_checks


@pytest.fixture(scope="module")
def report(doily):
    return run_checks(doily)


def test_all_checks_pass(report):
    failures = [format_check(result) for result in report.checks if not result.passed]
    assert failures == []
    assert report.overall
    assert report.first_failure is None


def test_every_registered_check_runs(report):
    assert [result.name for result in report.checks] == [name for name, _, _ in CHECKS]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("Veldkamp lines", "155"),
        ("Veldkamp points", "31"),
        ("Hyperplanes", "31"),
        ("Automorphism group order", "720"),
        ("PG(4,2) isomorphism", "31 functionals, 155 lines"),
    ],
)
def test_key_counts(report, name, expected):
    result = next(result for result in report.checks if result.name == name)
    assert result.expected == expected
    assert result.actual == expected


def test_report_text_mentions_veldkamp_lines(report):
    text = format_report(report)
    assert "PASS Veldkamp lines: expected 155" in text
    assert text.endswith(f"{len(report.checks)} of {len(report.checks)} checks passed")


def test_progress_callback(mocker, doily):
    progress = mocker.Mock()
    run_checks(doily, progress)
    assert progress.call_count == len(CHECKS)
    assert isinstance(progress.call_args.args[0], Check)


def test_missing_line_is_detected(broken_w2):
    report = run_checks(DoilyModel(broken_w2))
    assert not report.overall
    failure = report.first_failure
    assert failure.name == "W(2) symplectic model"
    assert failure.actual == "15 points, 14 lines"
    order = next(result for result in report.checks if result.name == "W(2) symplectic GQ order")
    assert not order.passed
    assert order.actual == "axiom iii violated"
    assert order.witness


def test_raising_check_fails_with_witness(mocker, doily):
    mocker.patch("verification.CHECKS", [])

    @check("Always raises", "anything")
    def _boom(m):
        raise ValueError("no luck")

    result = run_checks(doily)
    assert result.checks == [
        Check(
            name="Always raises",
            expected="anything",
            actual="error: ValueError",
            passed=False,
            witness="no luck",
        ),
    ]


def test_format_check():
    passed = Check(name="A", expected="1", actual="1", passed=True)
    failed = Check(name="B", expected="1", actual="2", passed=False, witness="point 3")
    assert format_check(passed) == "PASS A: expected 1"
    assert format_check(failed) == "FAIL B: expected 1, got 2 (point 3)"


def test_report_json_round_trip(report):
    again = VerificationReport.model_validate_json(report.model_dump_json())
    assert again.checks == report.checks
    assert '"overall":true' in report.model_dump_json()
