"""Entry point of the ``qh`` command.

    qh eval q_gamma2 --points 1,2,3
    qh eval laguerre_q2 --param j=2 --param alpha=0.5 --points 0.1,0.4
    qh transform fourier_fwd --input element.json --sign -1
    qh verify --suite qhankel --format csv

Every subcommand takes the run options --q, --m, --rel-tol, --max-terms,
--gamma, --seed and --format; unset options fall back to the ``QH_`` settings.
Tables and reports go to stdout, logs to stderr.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
"""

import argparse
import csv
import io
import json
import sys
from collections.abc import Mapping, Sequence
from pathlib import Path

from pydantic import ValidationError

from src.cli.commands import cmd_eval, cmd_transform, cmd_verify
from src.cli.evaluators import EVALUATORS, Params
from src.shared.config import get_settings
from src.shared.errors import QHarmonicError
from src.shared.logging import bind_context, clear_context, configure_logging, get_logger
from src.verify.schemas import SUITES, RunConfig, VerificationReport


logger = get_logger(__name__)

DEFAULT_POINTS = "0.2,0.5,0.9"


def _points(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        msg = f"points must be comma-separated numbers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from None


def _key_value(text: str) -> tuple[str, float]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        msg = f"expected key=value, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    try:
        return key.strip(), float(value)
    except ValueError:
        msg = f"parameter {key} needs a numeric value, got {value!r}"
        raise argparse.ArgumentTypeError(msg) from None


def _sign(text: str) -> int:
    if text not in ("1", "+1", "-1"):
        msg = f"sign must be +1 or -1, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    """Parser with the three subcommands sharing the run options."""
    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--q", type=float, default=None, help="Deformation parameter, 0 < q < 1.")
    run.add_argument("--m", type=int, default=None, help="Dimension, m >= 1.")
    run.add_argument("--rel-tol", type=float, default=None, dest="rel_tol", help="Verification tolerance floor.")
    run.add_argument("--max-terms", type=int, default=None, dest="max_terms", help="Series truncation cap.")
    run.add_argument("--gamma", type=float, default=None, help="Anchor of the infinite Jackson grid.")
    run.add_argument("--seed", type=int, default=None, help="Seed of the randomized checks.")
    run.add_argument("--format", choices=["csv", "json"], default=None, dest="output", help="Output format.")
    run.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None, dest="log_level", help="Log level."
    )

    parser = argparse.ArgumentParser(prog="qh", description="q-deformed harmonic analysis on quantum Euclidean space.")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", parents=[run], help="Evaluate a named function on points.")
    evaluate.add_argument("function", help=f"One of: {', '.join(sorted(EVALUATORS))}.")
    evaluate.add_argument(
        "--param", type=_key_value, action="append", default=[], help="Function parameter key=value, repeatable."
    )
    evaluate.add_argument("--points", type=_points, required=True, help="Comma-separated evaluation points.")

    transform = commands.add_parser("transform", parents=[run], help="Transform a JSON input and sample the result.")
    transform.add_argument("kind", choices=["hankel1", "hankel2", "fourier_fwd", "fourier_inv", "braided"])
    transform.add_argument("--input", default="-", help="JSON input file, '-' for stdin.")
    transform.add_argument("--nu", type=float, default=0.0, help="Order of the Hankel transforms.")
    transform.add_argument("--scale", type=float, default=1.0, help="beta for hankel1, gamma for hankel2.")
    transform.add_argument("--sign", type=_sign, default=1, help="Sign of the Fourier transforms, +1 or -1.")
    transform.add_argument("--points", type=_points, default=_points(DEFAULT_POINTS), help="Sample radii.")

    verify = commands.add_parser("verify", parents=[run], help="Run the identity checks.")
    verify.add_argument("--suite", choices=["all", *SUITES], default="all")
    return parser


def _csv_text(rows: Sequence[Mapping[str, object]]) -> str:
    fields: dict[str, None] = {}
    for row in rows:
        fields.update(dict.fromkeys(row))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fields), restval="", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if value is None else str(value) for key, value in row.items()})
    return buffer.getvalue()


def _report_rows(report: VerificationReport) -> list[dict[str, object]]:
    return [{"name": c.name, "status": c.status, "residual": c.residual, "tol": c.tol} for c in report.checks]


def _read_input(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def _dispatch(args: argparse.Namespace, config: RunConfig) -> tuple[int, str]:
    """Exit code and stdout text of one parsed command."""
    as_csv = config.output == "csv"
    if args.command == "eval":
        params: Params = dict(args.param)
        rows = cmd_eval(config, args.function, params, args.points)
        if as_csv:
            return 0, _csv_text(rows)
        return 0, json.dumps({"function": args.function, "samples": rows}, indent=2) + "\n"
    if args.command == "transform":
        result = cmd_transform(
            config, args.kind, _read_input(args.input), args.points, nu=args.nu, scale=args.scale, sign=args.sign
        )
        return 0, _csv_text(result.samples) if as_csv else result.model_dump_json(indent=2, exclude_none=True) + "\n"
    report = cmd_verify(config, args.suite)
    text = _csv_text(_report_rows(report)) if as_csv else report.to_json() + "\n"
    return (0 if report.ok else 1), text


def main(argv: list[str] | None = None) -> int:
    """Run one ``qh`` command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging(args.log_level)
    try:
        config = RunConfig.from_settings(
            get_settings(),
            q=args.q,
            m=args.m,
            rel_tol=args.rel_tol,
            max_terms=args.max_terms,
            gamma=args.gamma,
            seed=args.seed,
            output=args.output,
        )
        bind_context(command=args.command, q=config.q, m=config.m)
        code, text = _dispatch(args, config)
        sys.stdout.write(text)
        return code
    except ValidationError as exc:
        sys.stderr.write(f"qh: invalid input: {exc.error_count()} error(s)\n{exc}\n")
        return 2
    except (QHarmonicError, ValueError, OSError) as exc:
        logger.error("command_failed", command=args.command, error_type=type(exc).__name__, error=str(exc))
        sys.stderr.write(f"qh: {exc}\n")
        return 2
    finally:
        clear_context()


if __name__ == "__main__":
    sys.exit(main())
