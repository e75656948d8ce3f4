"""Command-line front end.

Every subcommand prints JSON with sorted keys by default, or a plain-text rendering with
``--format table``. Exit codes: 0 on success, 1 when a verification fails or tableau counts
disagree, 2 on malformed input or invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import typing as t

from . import __version__, chow, converter, exceptions, grassmann, ineq, partitions, types_, verify

__all__ = ["build_parser", "main"]

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

Handler = t.Callable[[argparse.Namespace], t.Tuple[int, str]]


def _load_json(path: str) -> t.Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise exceptions.ConfigError(f"Cannot read {path}: {exc.strerror}.", path) from exc
    except UnicodeDecodeError as exc:
        raise exceptions.ConversionError(f"{path} is not UTF-8 text.", path) from exc
    except json.JSONDecodeError as exc:
        raise exceptions.ConversionError(f"{path} is not valid JSON: {exc}.", path) from exc


def _write_output(path: str, output: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(output)
    except OSError as exc:
        raise exceptions.ConfigError(f"Cannot write {path}: {exc.strerror}.", path) from exc


def _nonnegative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {value!r}") from None
    if number < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {number}")
    return number


def _render(args: argparse.Namespace, data: t.Any, text: str) -> str:
    if args.format is types_.OutputFormat.TABLE:
        return text if text.endswith("\n") else text + "\n"
    return converter.dumps(data)


def _element_json(element: chow.GradedElement) -> t.Dict[str, t.Any]:
    return {"result": str(element), "terms": converter.graded_element_to_json(element)}


def _cmd_syt(args: argparse.Namespace) -> t.Tuple[int, str]:
    partition = converter.partition_from_str(args.partition)
    cap = partitions.LIMITS.SYT_BRUTEFORCE_CAP if args.cap is None else args.cap

    formula = partitions.syt_count_formula(partition)
    bruteforce = None
    if partition.weight <= cap:
        bruteforce = partitions.syt_count_bruteforce(partition, cap)
    agree = bruteforce is None or bruteforce == formula

    data = {
        "partition": converter.partition_to_json(partition),
        "formula": formula,
        "bruteforce": bruteforce,
        "agree": agree,
    }
    text = f"{formula} {'-' if bruteforce is None else bruteforce}"
    return (EXIT_OK if agree else EXIT_FAILURE), _render(args, data, text)


def _setup_from_args(args: argparse.Namespace) -> grassmann.GrassSetup:
    flags = (("--r", args.r), ("--d", args.d), ("--n", args.n))
    missing = [flag for flag, value in flags if value is None]
    if missing:
        raise exceptions.ConfigError(
            f"Missing required option(s) {', '.join(missing)}.", missing[0]
        )
    return grassmann.GrassSetup(args.n, args.r, args.d)


def _cmd_pushforward(args: argparse.Namespace) -> t.Tuple[int, str]:
    if args.input is not None:
        document = _load_json(args.input)
        if not isinstance(document, dict):
            raise exceptions.ConversionError("A push-forward input must be a JSON object.", "input")
        document = t.cast(t.Dict[str, t.Any], document)

        setup = converter.setup_from_json(document.get("setup"))
        extra: t.Sequence[t.Tuple[str, int]] = ()
        if document.get("generators"):
            declared = {"n": setup.n, "generators": document["generators"]}
            extra = converter.generator_table_from_json(declared).generators
        table = setup.base_table(extra)
        fibered = converter.fibered_class_from_json(document.get("class", []), setup, table)

    elif args.N is not None:
        setup = _setup_from_args(args)
        table = setup.base_table()
        fibered = grassmann.power(grassmann.chi(setup, table), args.N)

    else:
        raise exceptions.ConfigError("Pass either --input or --N.", "--input")

    segre = chow.segre_series(chow.chern_series(table, setup.r))
    result = grassmann.pushforward(fibered, setup, segre)
    data = {"setup": converter.setup_to_json(setup), **_element_json(result)}
    return EXIT_OK, _render(args, data, str(result))


def _cmd_verify(args: argparse.Namespace) -> t.Tuple[int, str]:
    config = verify.SuiteConfig()
    if args.input:
        config = verify.SuiteConfig.from_json(_load_json(args.input))

    fixed = {
        name: value
        for name, value in (
            ("r", args.r),
            ("d", args.d),
            ("n", args.n),
            ("N", args.N),
            ("partition", args.partition),
        )
        if value is not None
    }
    only = None
    if args.only:
        only = [
            verify.parse_case_name(name.strip(), "--only")
            for value in args.only
            for name in value.split(",")
            if name.strip()
        ]
    if args.workers is not None and args.workers < 1:
        raise exceptions.ConfigError(
            f"--workers must be at least 1, got {args.workers}.", "workers"
        )
    config = config.with_overrides(
        only=only, fixed=fixed, workers=args.workers, syt_bruteforce_cap=args.cap
    )
    reports = verify.run_suite(config)

    code = EXIT_OK if all(report.passed for report in reports) else EXIT_FAILURE
    data = verify.reports_to_json(reports, args.timings)
    return code, _render(args, data, verify.format_table(reports))


def _cmd_segre_ineq(args: argparse.Namespace) -> t.Tuple[int, str]:
    table = ineq.segre_table(args.r, args.n, args.N)

    if args.symbolic:
        expressions = [
            (k, ineq.segre_lhs_symbolic(args.r, args.n, k, args.N, table))
            for k in range(1, args.n + 1)
        ]
        data = {
            "expressions": [{"k": k, **_element_json(expr)} for k, expr in expressions],
            "required": ineq.required_monomials(args.r, args.n, args.N),
        }
        text = "\n".join(f"k={k}  {expr}" for k, expr in expressions)
        return EXIT_OK, _render(args, data, text)

    if args.input is None:
        raise exceptions.ConfigError(
            "Pass an intersection table with --input, or --symbolic.", "--input"
        )

    numbers = ineq.IntersectionTable.from_json(_load_json(args.input), table)
    values = ineq.check_inequalities(args.r, args.n, args.N, numbers)
    data = {
        "r": args.r,
        "n": args.n,
        "N": args.N,
        "values": [value.to_json() for value in values],
        "violations": [value.k for value in values if value.violated],
    }
    text = "\n".join(
        f"k={value.k}  {converter.rational_to_json(value.value)}  "
        f"{'VIOLATED' if value.violated else 'ok'}"
        for value in values
    )
    return EXIT_OK, _render(args, data, text)


def _cmd_schur(args: argparse.Namespace) -> t.Tuple[int, str]:
    partition = converter.partition_from_str(args.partition)
    if args.r < 1:
        raise exceptions.SetupError(f"The rank must be positive, got r={args.r}.", "r", args.r)
    if args.n < 0:
        raise exceptions.SetupError(
            f"The base dimension must be nonnegative, got n={args.n}.", "n", args.n
        )

    table = chow.chern_table(args.r, args.n)
    series = chow.chern_series(table, args.r)
    if args.segre:
        series = chow.segre_series(series)

    result = chow.schur_det(partition.parts, series)
    data = {
        "partition": converter.partition_to_json(partition),
        "series": "segre" if args.segre else "chern",
        **_element_json(result),
    }
    return EXIT_OK, _render(args, data, str(result))


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the ``grassmann-calculus`` command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=types_.OutputFormat,
        choices=list(types_.OutputFormat),
        default=types_.OutputFormat.JSON,
        metavar="{json,table}",
        help="output format (default: json)",
    )
    common.add_argument("--output", help="write the output to this file instead of stdout")

    capped = argparse.ArgumentParser(add_help=False)
    capped.add_argument(
        "--cap",
        type=_nonnegative_int,
        default=None,
        help="largest weight for brute-force tableau enumeration "
        f"(default: {partitions.LIMITS.SYT_BRUTEFORCE_CAP})",
    )

    parser = argparse.ArgumentParser(
        prog="grassmann-calculus",
        description="Symbolic push-forward computations on Grassmann bundles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    syt = subparsers.add_parser(
        "syt", parents=[common, capped], help="count standard Young tableaux"
    )
    syt.add_argument("--partition", required=True, help="a partition literal such as [2,1]")
    syt.set_defaults(handler=_cmd_syt)

    push = subparsers.add_parser("pushforward", parents=[common], help="push a class to the base")
    push.add_argument("--input", help="a JSON file with a setup and a class")
    push.add_argument("--r", type=int, help="rank of E")
    push.add_argument("--d", type=int, help="rank of the universal quotient")
    push.add_argument("--n", type=int, help="dimension of the base")
    push.add_argument("--N", type=int, help="push forward chi^N instead of an input class")
    push.set_defaults(handler=_cmd_pushforward)

    check = subparsers.add_parser(
        "verify", parents=[common, capped], help="run the verification suite"
    )
    check.add_argument("--input", help="a JSON suite configuration")
    check.add_argument(
        "--only",
        action="append",
        help="run only these cases (repeatable or comma-separated): "
        + ", ".join(name.value for name in types_.CaseName),
    )
    check.add_argument("--r", type=int, help="only cases with this rank")
    check.add_argument("--d", type=int, help="only cases with this quotient rank")
    check.add_argument("--n", type=int, help="only cases with this base dimension")
    check.add_argument("--N", type=int, help="only cases with this exponent")
    check.add_argument("--partition", help="only cases with this partition")
    check.add_argument("--workers", type=int, default=None, help="number of worker processes")
    check.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    check.set_defaults(handler=_cmd_verify)

    segre = subparsers.add_parser(
        "segre-ineq", parents=[common], help="evaluate Segre inequalities"
    )
    segre.add_argument("--r", type=int, required=True, help="rank of E")
    segre.add_argument("--n", type=int, required=True, help="dimension of the base")
    segre.add_argument("--N", type=int, required=True, help="codimension of the subvariety")
    segre.add_argument("--input", help="a JSON intersection table")
    segre.add_argument("--symbolic", action="store_true", help="print the expressions only")
    segre.set_defaults(handler=_cmd_segre_ineq)

    schur = subparsers.add_parser("schur", parents=[common], help="evaluate a Schur determinant")
    schur.add_argument("--partition", required=True, help="a partition literal such as [2,1]")
    schur.add_argument("--r", type=int, required=True, help="rank of the generic bundle")
    schur.add_argument("--n", type=int, required=True, help="dimension of the base")
    schur.add_argument("--segre", action="store_true", help="use Segre instead of Chern classes")
    schur.set_defaults(handler=_cmd_schur)

    return parser


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        format="%(name)s:%(levelname)s:%(message)s",
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
    )

    handler: Handler = args.handler
    try:
        code, output = handler(args)
        if args.output:
            _write_output(args.output, output)
    except exceptions.CalculusError as exc:
        _LOGGER.debug("Command %s failed.", args.command, exc_info=True)
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE

    if not args.output:
        sys.stdout.write(output)
    return code
