"""Command-line surface of jv."""
import argparse
import logging
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Sequence

from src.domain.entities.bundle import Bundle
from src.domain.entities.run_config import RunConfig
from src.domain.entities.solve_bounds import SolveBounds
from src.domain.errors.exceptions import (
    BidegreeError,
    BundleMismatchError,
    FormSyntaxError,
    IndexOutOfRangeError,
    InvalidConfigError,
    NotFoundWithinBoundsError,
    PreconditionViolationError,
    SelfCheckFailedError,
)
from src.infrastructure.settings.json_config_store import JsonConfigStore
from src.infrastructure.solvers.sympy_sparse_solver import SympySparseSolver
from src.infrastructure.syntax.pyparsing_form_codec import PyparsingFormCodec
from src.ui.view_models.command_view_model import CommandViewModel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_NOT_FOUND = 3
EXIT_INTERNAL = 4

DEFAULT_MAX_ORDER = 3
DEFAULT_MAX_DEGREE = 4


class UsageError(Exception):
    """Bad command line."""
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandOutcome:
    """Exit code and the text for stdout and stderr."""
    exit_code: int
    output: str = ""
    error: str = ""


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jv", description="Exact variational bicomplex calculator")
    parser.add_argument("-n", type=int, default=None, help="base dimension")
    parser.add_argument("-m", type=int, default=None, help="fibre dimension")
    parser.add_argument("--format", choices=["text", "json"], default=None)
    parser.add_argument("--config", type=Path, default=None, help="JSON run configuration")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name, help_text, k=False, solver=False, arg="form"):
        p = sub.add_parser(name, help=help_text)
        if k:
            p.add_argument("-k", type=int, required=True)
        if solver:
            p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
            p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
            p.add_argument("--no-deepening", action="store_true")
        p.add_argument(arg, help="'-' reads standard input")
        return p

    command("dh", "horizontal differential")
    command("dv", "vertical differential")
    command("d", "full differential d = d_h + d_v")
    command("hk", "contact-degree-k projection", k=True)
    command("split", "bidegree decomposition")
    command("el", "Euler–Lagrange source form of a Lagrangian", arg="lagrangian")
    command("helmholtz", "Helmholtz–Sonin map of a source form", arg="source")
    command("trivial", "is the Lagrangian variationally trivial", arg="lagrangian")
    command("variational", "is the source form locally variational", arg="source")
    command("tau", "interior Euler operator", k=True)
    command("eps", "variational map ε_k on (k-1, n)-forms", k=True)
    command("ek", "split an (n+k)-form into E_k, d_h-exact and higher parts", k=True)
    potential = command("potential", "potential for d_h, d_v or d", solver=True)
    potential.add_argument("--target", choices=["dh", "dv", "d"], required=True)
    command("tonti", "Tonti Lagrangian of a locally variational source form", arg="source")
    command("lagrangian", "Lagrangian by linear ansatz", solver=True, arg="source")
    command("decompose-kerdhdv", "decompose a form in Ker d_h d_v", solver=True)

    check = sub.add_parser("selfcheck", help="run the invariant suite")
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--cases", type=int, default=None)
    check.add_argument("--max-order", type=int, default=None)
    check.add_argument("--max-degree", type=int, default=None)
    check.add_argument("--max-terms", type=int, default=None)
    check.add_argument("--workers", type=int, default=None)
    check.add_argument("--save-config", type=Path, default=None)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger().setLevel(level)


def _effective_config(args) -> RunConfig:
    """Stored configuration overridden by explicit flags."""
    config = JsonConfigStore(args.config).load()
    overrides = {"n": args.n, "m": args.m, "format": args.format}
    if args.command == "selfcheck":
        overrides.update(
            seed=args.seed,
            cases=args.cases,
            max_order=args.max_order,
            max_degree=args.max_degree,
            max_terms=args.max_terms,
            workers=args.workers,
        )
    overrides = {key: value for key, value in overrides.items() if value is not None}
    try:
        return replace(config, **overrides)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _read(src: str) -> str:
    return sys.stdin.read() if src == "-" else src


def _dispatch(args, config: RunConfig) -> CommandOutcome:
    view_model = CommandViewModel(
        PyparsingFormCodec(), SympySparseSolver(), Bundle(config.n, config.m), config.format
    )
    cmd = args.command

    if cmd == "selfcheck":
        if args.save_config:
            JsonConfigStore(args.save_config).save(config)
        passed, transcript = view_model.self_check(config)
        return CommandOutcome(EXIT_OK if passed else EXIT_INTERNAL, transcript)

    if cmd in ("dh", "dv", "d"):
        which = {"dh": "d_h", "dv": "d_v", "d": "d_full"}[cmd]
        return CommandOutcome(EXIT_OK, view_model.differential(_read(args.form), which))
    if cmd == "hk":
        return CommandOutcome(EXIT_OK, view_model.contact_part(_read(args.form), args.k))
    if cmd == "split":
        return CommandOutcome(EXIT_OK, view_model.split(_read(args.form)))
    if cmd == "el":
        return CommandOutcome(EXIT_OK, view_model.euler_lagrange(_read(args.lagrangian)))
    if cmd == "helmholtz":
        return CommandOutcome(EXIT_OK, view_model.helmholtz(_read(args.source)))
    if cmd == "trivial":
        return CommandOutcome(EXIT_OK, view_model.is_trivial(_read(args.lagrangian)))
    if cmd == "variational":
        return CommandOutcome(EXIT_OK, view_model.is_variational(_read(args.source)))
    if cmd == "tau":
        return CommandOutcome(EXIT_OK, view_model.interior_euler(_read(args.form), args.k))
    if cmd == "eps":
        return CommandOutcome(EXIT_OK, view_model.variational_map(_read(args.form), args.k))
    if cmd == "ek":
        return CommandOutcome(EXIT_OK, view_model.ek_decompose(_read(args.form), args.k))
    if cmd == "tonti":
        return CommandOutcome(EXIT_OK, view_model.tonti(_read(args.source)))

    try:
        bounds = SolveBounds(args.max_order, args.max_degree, deepening=not args.no_deepening)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if cmd == "potential":
        return CommandOutcome(EXIT_OK, view_model.potential(_read(args.form), args.target, bounds))
    if cmd == "lagrangian":
        return CommandOutcome(EXIT_OK, view_model.find_lagrangian(_read(args.source), bounds))
    return CommandOutcome(EXIT_OK, view_model.decompose_kerdhdv(_read(args.form), bounds))


def run_command(argv: Optional[Sequence[str]] = None) -> CommandOutcome:
    """
    Parse argv, run the command and map errors to exit codes.

    Exit codes: 0 success, 1 parse or usage error, 2 precondition or bidegree
    violation, 3 nothing found within solver bounds, 4 internal inconsistency.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        _configure_logging(args.verbose)
        config = _effective_config(args)
        return _dispatch(args, config)
    except SystemExit as e:
        # --help
        return CommandOutcome(e.code if isinstance(e.code, int) else EXIT_OK)
    except (UsageError, FormSyntaxError, IndexOutOfRangeError, BundleMismatchError, InvalidConfigError) as e:
        return CommandOutcome(EXIT_USAGE, error=f"error: {e}")
    except (PreconditionViolationError, BidegreeError) as e:
        return CommandOutcome(EXIT_PRECONDITION, error=f"precondition violated: {e}")
    except NotFoundWithinBoundsError as e:
        return CommandOutcome(EXIT_NOT_FOUND, error=e.report())
    except SelfCheckFailedError as e:
        logger.error(f"Internal consistency failure: {e}")
        return CommandOutcome(EXIT_INTERNAL, error=f"internal error: {e}")
    except Exception as e:
        logger.exception("Unexpected failure")
        return CommandOutcome(EXIT_INTERNAL, error=f"internal error: {type(e).__name__}: {e}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    outcome = run_command(argv)
    if outcome.output:
        print(outcome.output)
    if outcome.error:
        print(outcome.error, file=sys.stderr)
    return outcome.exit_code
