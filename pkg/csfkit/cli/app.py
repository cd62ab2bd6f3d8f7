"""csfkit command-line application."""

import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from csfkit.cli import comp, poly, trees, verify
from csfkit.cli.dependencies import CliContext
from csfkit.cli.responses import success_response
from csfkit.config import error_types
from csfkit.config.constants import ERROR_MSG_INVALID_CONFIG, LOG_MSG_APP_STARTING
from csfkit.config.settings import VALID_LOG_LEVELS, Config, ConfigurationError
from csfkit.utils.errors import ValidationError, handle_cli_error
from csfkit.utils.logging_config import LoggingConfigurator
from csfkit.utils.version import TOOL_VERSION

logger = logging.getLogger(__name__)


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags; leaf parsers suppress defaults so flags given before the command survive."""
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="Print the JSON envelope instead of text")
    parser.add_argument("--threads", type=int, default=default, help="Worker threads")
    parser.add_argument("--csf-bound", type=int, default=default,
                        help="Largest tree order for subset enumeration")
    parser.add_argument("--tree-bound", type=int, default=default,
                        help="Largest order for tree enumeration")
    parser.add_argument("--composition-bound", type=int, default=default,
                        help="Largest order for composition-level verification")
    parser.add_argument("--log-level", type=str.upper, choices=VALID_LOG_LEVELS, default=default)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csf",
        description="Chromatic symmetric functions of trees, compositions and proper q-caterpillars",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    _add_global_flags(parser, suppress=False)

    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)

    subparsers = parser.add_subparsers(dest="command", required=True)
    trees.register(subparsers, common)
    poly.register(subparsers, common)
    comp.register(subparsers, common)
    verify.register(subparsers, common)
    return parser


def _load_config(args: argparse.Namespace) -> Config:
    config = Config()
    config.apply_overrides(
        THREADS=args.threads,
        CSF_ORDER_BOUND=args.csf_bound,
        TREE_ORDER_BOUND=args.tree_bound,
        COMPOSITION_ORDER_BOUND=args.composition_bound,
        LOG_LEVEL=args.log_level,
    )
    return config


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Parse arguments, run one command and write its output

    Returns:
        0 on success or PASS, 1 on verification FAIL, 2 on usage or bound errors
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0

    try:
        config = _load_config(args)
    except ConfigurationError as e:
        error = ValidationError(
            ERROR_MSG_INVALID_CONFIG.format(detail=e),
            error_type=error_types.CONFIGURATION_ERROR,
        )
        return handle_cli_error(error, as_json=args.json, stdout=stdout, stderr=stderr)

    LoggingConfigurator.setup_logging(log_level=config.LOG_LEVEL, log_file=config.LOG_FILE)
    logger.info(LOG_MSG_APP_STARTING.format(command=" ".join(argv or sys.argv[1:])))

    context = CliContext(config)
    try:
        result = args.handler(args, context)
    except Exception as e:
        return handle_cli_error(e, as_json=args.json, stdout=stdout, stderr=stderr)
    finally:
        context.close()

    if args.json:
        stdout.write(json.dumps(success_response(result.data, result.meta), sort_keys=True) + "\n")
    else:
        stdout.write(result.render_text())
    return result.exit_code
