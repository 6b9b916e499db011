"""Command line for the W(2) doily: verification, Table 1 and 2, exports and Mermin squares.

Usage:
    python src/doily.py verify [--format=text|json] [--output=PATH] [--quiet]
    python src/doily.py table1 [--format=text|csv]
    python src/doily.py table2 [--format=text|csv]
    python src/doily.py export --format=json|dot|csv --output=PATH
    python src/doily.py mermin [--quiet]

Every subcommand also takes --config=PATH, a tornado options file setting
format, output or quiet. Exit status: 0 success, 1 failed check, 2 usage error.
"""

import sys
from collections.abc import Callable, Sequence
from pathlib import Path

import tornado.options

from doily_model import DoilyModel
from errors import DoilyError, UsageError
from exporters import (
    export_dot,
    export_json,
    format_mermin,
    format_table1,
    format_table2,
    table1_csv,
    table2_csv,
    table2_rows,
    write_csv_tables,
)
from models import Check, VerificationReport
from pauli import minus_sign_distribution
from verification import format_check, format_report, run_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = {
    "verify": ("text", "json"),
    "table1": ("text", "csv"),
    "table2": ("text", "csv"),
    "export": ("json", "dot", "csv"),
    "mermin": ("text",),
}
USAGE = (
    "usage: doily.py {" + ",".join(FORMATS) + "} [--format=FORMAT] [--output=PATH] [--quiet] [--config=PATH]\n"
    "options are written --name=value, e.g. --format=json, not --format json"
)

Options = tornado.options.OptionParser


def define_options() -> Options:
    """Fresh option set, so repeated main() calls never share state."""
    options = tornado.options.OptionParser()
    options.define("format", default=None, type=str, help="output format, depends on the subcommand")
    options.define("output", default=None, type=str, help="write to this path instead of stdout")
    options.define("quiet", default=False, type=bool, help="print only the verdict")
    options.define(
        "config",
        type=str,
        help="tornado options file with format, output or quiet",
        callback=lambda path: options.parse_config_file(path, final=False),
    )
    return options


def parse_args(argv: Sequence[str]) -> tuple[str, Options]:
    """Split `prog command --name=value ...` into the command and its parsed options."""
    if len(argv) < 2 or argv[1].startswith("-"):  # noqa: PLR2004
        raise UsageError(f"Expected a subcommand, one of {', '.join(FORMATS)}")
    command = argv[1]
    if command not in FORMATS:
        raise UsageError(f"Unknown subcommand {command!r}, expected one of {', '.join(FORMATS)}")
    options = define_options()
    try:
        extra = options.parse_command_line([argv[0], *argv[2:]])
    except FileNotFoundError as e:
        raise UsageError(f"Config file not found: {e.filename}") from e
    if extra:
        raise UsageError(f"Unexpected arguments: {' '.join(extra)}")
    options.format = options.format or FORMATS[command][0]
    if options.format not in FORMATS[command]:
        raise UsageError(
            f"{command} supports --format={'|'.join(FORMATS[command])}, got {options.format!r}",
        )
    return command, options


def emit(text: str, output: str | None) -> None:
    """Print `text` or write it to `output`."""
    if not output:
        print(text)
        return
    try:
        Path(output).write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise UsageError(f"Cannot write {output}: {e}") from e


def cmd_verify(model: DoilyModel, options: Options) -> tuple[int, VerificationReport]:
    """Run every check; 0 only if all pass."""
    live = options.format == "text" and not options.output and not options.quiet

    def progress(result: Check) -> None:
        if live:
            print(format_check(result))

    report = run_checks(model, progress)
    if options.format == "json":
        emit(report.model_dump_json(indent=2), options.output)
    elif options.output:
        emit(format_report(report), options.output)
    if options.format == "text" or options.output:
        if failure := report.first_failure:
            print("#" * 5, f" {format_check(failure)}")
        passed = sum(result.passed for result in report.checks)
        print(f"{passed} of {len(report.checks)} checks passed")
    return (EXIT_OK if report.overall else EXIT_FAILED), report


def cmd_table1(model: DoilyModel, options: Options) -> int:
    rows = model.veldkamp.table1()
    emit(table1_csv(rows).rstrip("\n") if options.format == "csv" else format_table1(rows), options.output)
    return EXIT_OK


def cmd_table2(model: DoilyModel, options: Options) -> int:
    rows = table2_rows(model)
    emit(table2_csv(rows).rstrip("\n") if options.format == "csv" else format_table2(rows), options.output)
    return EXIT_OK


def cmd_export(model: DoilyModel, options: Options) -> int:
    """Write the json or dot file, or a folder of csv tables, to --output."""
    if not options.output:
        raise UsageError("export needs --output=PATH")
    if options.format == "csv":
        try:
            paths = write_csv_tables(model, Path(options.output))
        except OSError as e:
            raise UsageError(f"Cannot write {options.output}: {e}") from e
    else:
        emit(export_json(model) if options.format == "json" else export_dot(model), options.output)
        paths = [Path(options.output)]
    if not options.quiet:
        for path in paths:
            print(f"Exported {path}")
    return EXIT_OK


def cmd_mermin(model: DoilyModel, options: Options) -> int:
    """Print every grid as a Mermin square; 1 if some square has sign product +1."""
    squares = model.mermin_squares
    if not options.quiet:
        emit("\n\n".join(format_mermin(square) for square in squares), options.output)
    negative = sum(1 for square in squares if square.sign_product == -1)
    print(f"{len(squares)} squares, six-sign product -1 for {negative}")
    print(f"Minus-identity products per square: {minus_sign_distribution(squares)}")
    return EXIT_OK if negative == len(squares) else EXIT_FAILED


COMMANDS: dict[str, Callable[[DoilyModel, Options], int]] = {
    "verify": lambda model, options: cmd_verify(model, options)[0],
    "table1": cmd_table1,
    "table2": cmd_table2,
    "export": cmd_export,
    "mermin": cmd_mermin,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return the exit status."""
    argv = list(sys.argv if argv is None else argv)
    try:
        command, options = parse_args(argv)
        return COMMANDS[command](DoilyModel(), options)
    except (UsageError, tornado.options.Error) as e:
        print("#" * 5, f" {e}")
        print(USAGE)
        return EXIT_USAGE
    except DoilyError as e:
        print("#" * 5, f" {type(e).__name__}: {e}")
        return EXIT_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
