import json

import pytest

from doily import EXIT_FAILED, EXIT_OK, EXIT_USAGE, cmd_verify, main, parse_args
from doily_model import DoilyModel
from errors import UsageError
from exporters import read_json


@pytest.fixture
def shared_model(mocker, doily):
    """Reuse the session model instead of rebuilding it per command."""
    return mocker.patch("doily.DoilyModel", return_value=doily)


def test_parse_args_defaults():
    command, options = parse_args(["doily.py", "table1"])
    assert command == "table1"
    assert options.format == "text"
    assert options.output is None
    assert options.quiet is False


def test_parse_args_options():
    command, options = parse_args(["doily.py", "verify", "--format=json", "--quiet", "--output=r.json"])
    assert command == "verify"
    assert options.format == "json"
    assert options.quiet is True
    assert options.output == "r.json"


@pytest.mark.parametrize(
    "argv",
    [
        ["doily.py"],
        ["doily.py", "--format=csv"],
        ["doily.py", "draw"],
        ["doily.py", "table1", "--format=dot"],
        ["doily.py", "table1", "extra"],
        ["doily.py", "table1", "--config=/nonexistent/doily.conf"],
    ],
)
def test_parse_args_usage_errors(argv):
    with pytest.raises(UsageError):
        parse_args(argv)


def test_unknown_option_exits_2(capsys):
    assert main(["doily.py", "table1", "--colour=red"]) == EXIT_USAGE
    out = capsys.readouterr().out
    assert out.startswith("#####")
    assert "usage:" in out


def test_export_needs_output(shared_model, capsys):
    assert main(["doily.py", "export", "--format=json"]) == EXIT_USAGE
    assert "--output" in capsys.readouterr().out


def test_config_file(tmp_path):
    config = tmp_path / "doily.conf"
    config.write_text('format = "csv"\nquiet = True\n', encoding="utf-8")
    _, options = parse_args(["doily.py", "table1", f"--config={config}"])
    assert options.format == "csv"
    assert options.quiet is True


def test_verify(shared_model, capsys):
    assert main(["doily.py", "verify"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS Veldkamp lines: expected 155" in out
    assert "#####" not in out
    assert out.rstrip().splitlines()[-1].endswith("checks passed")


def test_verify_quiet(shared_model, capsys):
    assert main(["doily.py", "verify", "--quiet"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    assert lines[0].endswith("checks passed")


def test_verify_json_to_file(shared_model, tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["doily.py", "verify", "--format=json", f"--output={target}"]) == EXIT_OK
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report["overall"] is True
    assert any(check["name"] == "Veldkamp lines" for check in report["checks"])
    assert "checks passed" in capsys.readouterr().out


def test_verify_detects_missing_line(mocker, broken_w2, capsys):
    mocker.patch("doily.DoilyModel", return_value=DoilyModel(broken_w2))
    assert main(["doily.py", "verify", "--quiet"]) == EXIT_FAILED
    out = capsys.readouterr().out
    assert out.startswith("#####")
    assert "FAIL W(2) symplectic model: expected 15 points, 15 lines, got 15 points, 14 lines" in out


def test_cmd_verify_returns_report(doily):
    _, options = parse_args(["doily.py", "verify", "--quiet"])
    status, report = cmd_verify(doily, options)
    assert status == EXIT_OK
    assert report.overall


def test_table1_text(shared_model, capsys):
    assert main(["doily.py", "table1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Unicentric Triad" in out
    assert out.splitlines()[-1].split() == ["Total", "155"]


def test_table1_csv(shared_model, capsys):
    assert main(["doily.py", "table1", "--format=csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "line_type,perps,grids,ovoids,count"
    assert "Pentad,1,2,0,45" in lines


def test_table2(shared_model, capsys):
    assert main(["doily.py", "table2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "set of six operators commuting with a given one" in out


def test_export_json_twice_is_identical(shared_model, tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["doily.py", "export", "--format=json", f"--output={first}"]) == EXIT_OK
    assert main(["doily.py", "export", "--format=json", f"--output={second}"]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert len(read_json(first.read_text(encoding="utf-8")).veldkamp_lines) == 155
    assert f"Exported {first}" in capsys.readouterr().out


def test_export_dot(shared_model, tmp_path):
    target = tmp_path / "doily.dot"
    assert main(["doily.py", "export", "--format=dot", f"--output={target}", "--quiet"]) == EXIT_OK
    assert target.read_text(encoding="utf-8").startswith("graph collinearity {")


def test_export_csv_matches_table1(shared_model, tmp_path, capsys):
    folder = tmp_path / "csv"
    assert main(["doily.py", "export", "--format=csv", f"--output={folder}", "--quiet"]) == EXIT_OK
    assert main(["doily.py", "table1", "--format=csv"]) == EXIT_OK
    printed = capsys.readouterr().out
    assert (folder / "table1.csv").read_text(encoding="utf-8") == printed


def test_export_unwritable_target(shared_model, tmp_path, capsys):
    target = tmp_path / "missing" / "doily.json"
    assert main(["doily.py", "export", "--format=json", f"--output={target}"]) == EXIT_USAGE
    out = capsys.readouterr().out
    assert out.startswith("#####")
    assert "Cannot write" in out


def test_mermin(shared_model, capsys):
    assert main(["doily.py", "mermin"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("  six-sign product -1\n") == 10
    assert "10 squares, six-sign product -1 for 10" in out
    assert "Minus-identity products per square" in out


def test_mermin_quiet(shared_model, capsys):
    assert main(["doily.py", "mermin", "--quiet"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "10 squares, six-sign product -1 for 10"
    assert len(lines) == 2


def test_space_separated_option_value_explains_the_form(capsys):
    assert main(["doily.py", "table1", "--format", "csv"]) == EXIT_USAGE
    out = capsys.readouterr().out
    assert out.startswith("#####")
    assert "--name=value" in out
