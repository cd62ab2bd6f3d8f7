"""`verify` commands: desk-scale verification runs with cached reports."""

import argparse
from typing import Any, Dict

from csfkit.cli.dependencies import CliContext, CommandResult
from csfkit.config.constants import (
    DEFAULT_CLASSES_MAX_WEIGHT,
    DEFAULT_EQ3_MAX_ORDER,
    DEFAULT_LEMMA3_MAX_ORDER,
    DEFAULT_PROP1_MAX_ORDER,
    DEFAULT_UPOLY_MAX_ORDER,
    DEFAULT_UPOLY_RANDOM_TREES,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    verify_p = subparsers.add_parser("verify", help="Desk-scale verification runs")
    commands = verify_p.add_subparsers(dest="verify_command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        parser = commands.add_parser(name, parents=[common], help=help_text)
        parser.add_argument("--cache", action="store_true",
                            help="Serve an identical earlier run from the cache directory")
        parser.set_defaults(handler=cmd_verify)
        return parser

    p = add("theorem1", "L-polynomial classes of caterpillar compositions are {a, a*}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=None,
                   help="Default: the composition order bound")

    p = add("lemma3", "Restricted U-polynomial equals L(phi(T)) on every caterpillar")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=DEFAULT_LEMMA3_MAX_ORDER)

    p = add("eq3", "CSF recovered from the U-polynomial on every tree")
    p.add_argument("--max-order", type=int, default=DEFAULT_EQ3_MAX_ORDER)

    p = add("prop1", "Structural and trunk/twig/diameter recognizers agree on every tree")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=DEFAULT_PROP1_MAX_ORDER)

    p = add("upoly", "Dynamic-program U-polynomial against subset enumeration")
    p.add_argument("--max-order", type=int, default=DEFAULT_UPOLY_MAX_ORDER)
    p.add_argument("--random", type=int, default=DEFAULT_UPOLY_RANDOM_TREES,
                   help="Number of additional random trees")

    p = add("lemma4", "Factorization shape of every caterpillar composition")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=None,
                   help="Default: the composition order bound")

    p = add("classes", "Factor-reversal classes against L-polynomial grouping")
    p.add_argument("--max-weight", type=int, default=DEFAULT_CLASSES_MAX_WEIGHT)


def _params(args: argparse.Namespace, context: CliContext) -> Dict[str, Any]:
    command = args.verify_command
    if command in ("theorem1", "lemma4"):
        max_order = args.max_order
        if max_order is None:
            max_order = context.config.COMPOSITION_ORDER_BOUND
        return {"q": args.q, "max_order": max_order}
    if command in ("lemma3", "prop1"):
        return {"q": args.q, "max_order": args.max_order}
    if command == "upoly":
        return {"max_order": args.max_order, "random_trees": args.random}
    if command == "classes":
        return {"max_weight": args.max_weight}
    return {"max_order": args.max_order}


def cmd_verify(args: argparse.Namespace, context: CliContext) -> CommandResult:
    service = context.container.verification_service
    result = service.run(args.verify_command, _params(args, context), use_cache=args.cache)
    lines = result.text.splitlines()
    return CommandResult(
        lines=lines,
        data={
            "command": result.manifest.command,
            "params": dict(sorted(result.manifest.params.items())),
            "status": result.manifest.outcome,
            "report": lines,
        },
        exit_code=EXIT_OK if result.passed else EXIT_VERIFICATION_FAILED,
    )
