"""Evaluate, tabulate and verify Bateman, Havelock and Bateman-integral functions."""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import logging
import os
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

import attrs

from bateman import __version__, docs, errors, figures, identity_registry, transforms, utils
from bateman.bateman_core import bateman_k, havelock_h
from bateman.bateman_integral import bessel_integral_ji, ki
from bateman.constants import get_log_dir
from bateman.generalized import GenParams, bateman_k_gen, havelock_h_gen
from bateman.identity_registry import Status, SuiteReport
from bateman.quadrature import EvalResult, QuadConfig

logger = logging.getLogger(__name__)

LOG_FILE_NAME = "bateman.log"

FUNCTIONS = ("k", "h", "kgen", "hgen", "ki", "ji")

TABLE_HEADER = ("nu", "x", "value", "err_est", "method")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2
EXIT_IO = 3

# Settings a config file may hold, with their built-in defaults; command-line flags of the
# same name override file values
DEFAULTS: dict[str, utils.Setting] = {
    "fn": "k",
    "nu": None,
    "x": None,
    "alpha": 0.0,
    "beta": 0.0,
    "x_min": 0.0,
    "x_max": 5.0,
    "x_step": 0.5,
    "format": None,
    "output": None,
    "output_dir": None,
    "filter": None,
    "parallelism": 1,
    "timings": False,
    "id": None,
    "s": None,
    "report": None,
    "abs_tol": 1e-10,
    "rel_tol": 1e-10,
}


def _orders(value: Any) -> tuple[float, ...]:
    if value is None:
        return ()
    if isinstance(value, (list, tuple)):
        return tuple(float(v) for v in value)
    return (float(value),)


def _optional_float(value: Any) -> float | None:
    return None if value is None else float(value)


def _positive(instance: CliConfig, attribute: attrs.Attribute, value: float) -> None:
    if not value > 0:
        raise errors.ConfigError(f"{attribute.name} must be > 0, got {value!r}")


@attrs.frozen
class CliConfig:
    """Effective settings of one command, after merging defaults, config file and flags.

    Attributes:
        command: The subcommand.
        fn: Function name, one of `FUNCTIONS`.
        nu: Orders; `eval` takes exactly one.
        x: Argument of `eval`.
        alpha: Power of cos(theta) for the generalized functions.
        beta: Power of sin(theta) for the generalized functions.
        x_min: First argument of a table.
        x_max: Last argument of a table.
        x_step: Argument step of a table.
        format: Output format; "text" or "json" for `eval`, "csv" or "json" for `table`.
        output: Output file; stdout when None.
        output_dir: Output directory of `figures` and `docs`.
        filter: Identity filter of `verify` and `docs`.
        parallelism: Worker threads.
        timings: Whether suite reports carry per-identity wall times.
        id: Transform id of `laplace`.
        s: Transform variable of `laplace`.
        report: Saved suite report for `docs`.
        abs_tol: Absolute quadrature tolerance.
        rel_tol: Relative quadrature tolerance.
    """

    command: str
    fn: str = attrs.field(default="k", validator=attrs.validators.in_(FUNCTIONS))
    nu: tuple[float, ...] = attrs.field(default=(), converter=_orders)
    x: float | None = attrs.field(default=None, converter=_optional_float)
    alpha: float = attrs.field(default=0.0, converter=float)
    beta: float = attrs.field(default=0.0, converter=float)
    x_min: float = attrs.field(default=0.0, converter=float)
    x_max: float = attrs.field(default=5.0, converter=float)
    x_step: float = attrs.field(default=0.5, converter=float, validator=_positive)
    format: str | None = None
    output: str | None = None
    output_dir: str | None = None
    filter: str | None = None
    parallelism: int = attrs.field(default=1, converter=int, validator=attrs.validators.ge(1))
    timings: bool = attrs.field(default=False, converter=bool)
    id: str | None = None
    s: float | None = attrs.field(default=None, converter=_optional_float)
    report: str | None = None
    abs_tol: float = attrs.field(default=1e-10, converter=float, validator=_positive)
    rel_tol: float = attrs.field(default=1e-10, converter=float, validator=_positive)

    @x_max.validator
    def _check_range(self, attribute: attrs.Attribute, value: float) -> None:
        if not self.x_min < value:
            raise errors.ConfigError(f"x_min must be < x_max, got [{self.x_min!r}, {value!r}]")

    def quad_config(self) -> QuadConfig:
        return QuadConfig(abs_tol=self.abs_tol, rel_tol=self.rel_tol)


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """Merges built-in defaults, the `--config` file and the command-line flags.

    Raises:
        ConfigError for unknown keys in the config file or invalid values.
        OSError if the config file cannot be read or the settings cannot be saved.
    """
    settings = dict(DEFAULTS)
    if args.config:
        loaded = utils.load_settings(args.config)
        unknown = sorted(set(loaded) - set(DEFAULTS))
        if unknown:
            raise errors.ConfigError(f"Unknown config keys in {args.config}: {', '.join(unknown)}")
        settings.update(loaded)
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if isinstance(settings["nu"], tuple):
        settings["nu"] = list(settings["nu"])

    if args.save_config:
        saved = {key: value for key, value in settings.items() if value is not None}
        utils.save_settings(saved, args.save_config)

    try:
        return CliConfig(command=args.command, **settings)  # type: ignore[arg-type]
    except errors.ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise errors.ConfigError(f"Invalid setting: {e}") from e


def _integer_index(nu: float, name: str) -> int:
    if nu < 0 or int(nu) != nu:
        raise errors.ConfigError(f"{name} needs a non-negative integer order, got {nu!r}")
    return int(nu)


def evaluate(
    fn: str, nu: float, x: float, cfg: QuadConfig, alpha: float = 0.0, beta: float = 0.0
) -> EvalResult:
    """Evaluates one of `FUNCTIONS` at (nu, x).

    For "ki", `nu` is the first index 2n of ki_2n and must be even.

    Raises:
        ConfigError for an unknown function or an invalid index.
        DomainError or UnsupportedError from the evaluation itself.
    """
    match fn:
        case "k":
            return bateman_k(nu, x, cfg)
        case "h":
            return havelock_h(nu, x, cfg)
        case "kgen":
            return bateman_k_gen(GenParams(nu, alpha, beta), x, cfg)
        case "hgen":
            return havelock_h_gen(GenParams(nu, alpha, beta), x, cfg)
        case "ki":
            index = _integer_index(nu, "ki")
            if index % 2:
                raise errors.ConfigError(f"ki_2n takes an even first index, got {nu!r}")
            return ki(index // 2, x, cfg)
        case "ji":
            return bessel_integral_ji(_integer_index(nu, "ji"), x, cfg)
        case _:
            raise errors.ConfigError(f"Unknown function {fn!r}")


def cmd_eval(config: CliConfig) -> int:
    if len(config.nu) != 1 or config.x is None:
        raise errors.ConfigError("eval needs one --nu and an --x")
    nu = config.nu[0]
    result = evaluate(config.fn, nu, config.x, config.quad_config(), config.alpha, config.beta)

    if config.format == "json":
        data = {
            "fn": config.fn,
            "nu": nu,
            "x": config.x,
            "value": result.value,
            "err_est": result.err_est,
            "method": result.method.name,
            "converged": result.converged,
        }
        sys.stdout.write(utils.dump_json(data))
    elif config.format in (None, "text"):
        print(
            f"value={result.value:.10g} err_est={result.err_est:.3g} method={result.method.name}"
        )
    else:
        raise errors.ConfigError(f"eval prints text or json, got {config.format!r}")

    if not result.converged:
        logger.warning("%s(%r, %r) did not converge", config.fn, nu, config.x)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


TableRow = tuple[float, float, float | None, float | None, str]


def table_rows(config: CliConfig) -> list[TableRow]:
    """Evaluates the table's grid, ordered by order and then by argument.

    A point that raises gets empty value, error and method cells and the table continues.
    """
    if not config.nu:
        raise errors.ConfigError("table needs at least one --nu")
    cfg = config.quad_config()
    xs = figures.grid_points(config.x_min, config.x_max, config.x_step)
    tasks = [(nu, x) for nu in config.nu for x in xs]

    def row(task: tuple[float, float]) -> TableRow:
        nu, x = task
        try:
            result = evaluate(config.fn, nu, x, cfg, config.alpha, config.beta)
        except errors.ConfigError:
            raise
        except errors.BatemanError as e:
            logger.warning("%s(%r, %r): %s", config.fn, nu, x, e)
            return nu, x, None, None, ""
        if not result.converged:
            logger.warning(
                "%s(%r, %r) did not converge, err_est=%.3g", config.fn, nu, x, result.err_est
            )
        return nu, x, result.value, result.err_est, result.method.name

    if config.parallelism == 1:
        return [row(task) for task in tasks]
    with concurrent.futures.ThreadPoolExecutor(max_workers=config.parallelism) as pool:
        return list(pool.map(row, tasks))


def cmd_table(config: CliConfig) -> int:
    rows = table_rows(config)
    match config.format:
        case None | "csv":
            if config.output:
                utils.write_csv(config.output, TABLE_HEADER, rows)
            else:
                utils.write_csv_stream(sys.stdout, TABLE_HEADER, rows)
        case "json":
            data = [dict(zip(TABLE_HEADER, r)) | {"converged": r[2] is not None} for r in rows]
            if config.output:
                utils.write_json(config.output, data)
            else:
                sys.stdout.write(utils.dump_json(data))
        case _:
            raise errors.ConfigError(f"table writes csv or json, got {config.format!r}")
    return EXIT_OK


def cmd_figures(config: CliConfig) -> int:
    output_dir = config.output_dir or "figures"
    try:
        figures.write_figures(output_dir, config.quad_config(), config.parallelism)
    except errors.NonConvergedError as e:
        logger.error("%s", e)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    report = identity_registry.run_suite(config.filter, config.quad_config(), config.parallelism)
    if config.output:
        utils.write_json(config.output, report.to_dict(config.timings))

    for entry in report.entries:
        if entry.status is Status.PASS:
            continue
        residual = docs.format_residual(entry.max_residual)
        print(f"{entry.status.name} {entry.identity} max_residual={residual}")
        for message in entry.errors:
            print(f"    {message}")
    print(report.summary_line())
    return EXIT_OK if report.ok else EXIT_NOT_CONVERGED


def cmd_laplace(config: CliConfig) -> int:
    if config.id is None or config.s is None:
        raise errors.ConfigError("laplace needs an --id and an --s")
    comparison = transforms.compare(config.id, config.s, cfg=config.quad_config())
    print(
        f"numeric={comparison.numeric.value:.10g} closed={comparison.closed:.10g} "
        f"residual={comparison.residual:.3g}"
    )
    return EXIT_OK


def load_report(path: str) -> SuiteReport:
    with open(path, "r", encoding="utf-8") as f:
        try:
            return SuiteReport.from_dict(json.load(f))
        except (json.JSONDecodeError, KeyError) as e:
            raise errors.ConfigError(f"{path} is not a suite report: {e}") from e


def cmd_docs(config: CliConfig) -> int:
    if config.report:
        report = load_report(config.report)
    else:
        report = identity_registry.run_suite(
            config.filter, config.quad_config(), config.parallelism
        )
    docs.render_catalog(report, config.output_dir or "docs")
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "figures": cmd_figures,
    "verify": cmd_verify,
    "laplace": cmd_laplace,
    "docs": cmd_docs,
}


class ArgumentParser(argparse.ArgumentParser):
    """Exits with status 1 on usage errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level.")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Log warnings only.")
    common.add_argument(
        "--log-file",
        action="store_true",
        help=f"Also log to {LOG_FILE_NAME} in the user log directory.",
    )
    common.add_argument(
        "--config",
        help="JSON settings file, or the name of settings saved with --save-config.",
    )
    common.add_argument("--save-config", metavar="NAME", help="Save the effective settings.")
    common.add_argument("--abs-tol", type=float, help="Absolute quadrature tolerance.")
    common.add_argument("--rel-tol", type=float, help="Relative quadrature tolerance.")
    return common


def _add_function_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--fn", choices=FUNCTIONS, help="Function to evaluate (default k).")
    parser.add_argument("--alpha", type=float, help="Power of cos(theta) for kgen and hgen.")
    parser.add_argument("--beta", type=float, help="Power of sin(theta) for kgen and hgen.")


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = ArgumentParser(prog="bateman", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    eval_parser = subparsers.add_parser("eval", parents=[common], help="Evaluate one point.")
    _add_function_options(eval_parser)
    eval_parser.add_argument("--nu", type=float, help="Order (first index 2n for ki).")
    eval_parser.add_argument("--x", type=float, help="Argument.")
    eval_parser.add_argument("--format", choices=("text", "json"))

    table = subparsers.add_parser("table", parents=[common], help="Tabulate over a grid.")
    _add_function_options(table)
    table.add_argument("--nu", type=float, action="append", help="Order; repeat for more.")
    table.add_argument("--x-min", type=float, help="First argument.")
    table.add_argument("--x-max", type=float, help="Last argument.")
    table.add_argument("--x-step", type=float, help="Argument step.")
    table.add_argument("--format", choices=("csv", "json"))
    table.add_argument("--output", "-o", help="Output file (default stdout).")
    table.add_argument("--parallelism", "-j", type=int, help="Worker threads.")

    figs = subparsers.add_parser("figures", parents=[common], help="Write the figure data.")
    figs.add_argument("--output-dir", help="Directory for fig01.csv to fig12.csv.")
    figs.add_argument("--parallelism", "-j", type=int, help="Worker threads.")

    verify = subparsers.add_parser("verify", parents=[common], help="Run the identity suite.")
    verify.add_argument("--filter", help="ASSERT, DIAGNOSE, or a substring of id or citation.")
    verify.add_argument("--output", "-o", help="Write the JSON suite report here.")
    verify.add_argument("--parallelism", "-j", type=int, help="Worker threads.")
    verify.add_argument(
        "--timings", action="store_true", default=None, help="Record per-identity times."
    )

    laplace = subparsers.add_parser("laplace", parents=[common], help="Check a transform.")
    laplace.add_argument("--id", help="Transform id, e.g. eq37_k0.")
    laplace.add_argument("--s", type=float, help="Transform variable.")

    docs_parser = subparsers.add_parser("docs", parents=[common], help="Render the docs pages.")
    docs_parser.add_argument("--output-dir", help="Directory for the pages (default docs).")
    docs_parser.add_argument("--report", help="Use a saved suite report instead of a new run.")
    docs_parser.add_argument("--filter", help="Identity filter for a new run.")
    docs_parser.add_argument("--parallelism", "-j", type=int, help="Worker threads.")

    args = parser.parse_args(argv)
    return args


def configure_logging(verbose: bool = False, quiet: bool = False, log_file: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(os.path.join(get_log_dir(), LOG_FILE_NAME)))
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        handlers=handlers,
        force=True,
    )


def main(args: argparse.Namespace) -> int:
    configure_logging(args.verbose, args.quiet, args.log_file)
    try:
        config = resolve_config(args)
        return COMMANDS[config.command](config)
    except (errors.BatemanError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("%s", e)
        return EXIT_IO


def run() -> None:
    sys.exit(main(parse_args(sys.argv[1:])))


if __name__ == "__main__":
    run()
