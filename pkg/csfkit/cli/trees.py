"""`trees` commands: enumeration, invariants and canonical codes."""

import argparse
import logging

from csfkit.cli.dependencies import CliContext, CommandResult
from csfkit.core.enumeration import enumerate_trees
from csfkit.core.trees import canonical_code, degree_sequence, diameter, tree_center, trunk, twigs
from csfkit.utils.errors import BoundExceededError, NoTrunkError
from csfkit.utils.formatters import format_int_sequence, format_tree, format_twigs
from csfkit.utils.validators import parse_tree_spec, validate_positive

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    trees_p = subparsers.add_parser("trees", help="Free trees: enumeration and invariants")
    commands = trees_p.add_subparsers(dest="trees_command", required=True)

    enum_p = commands.add_parser(
        "enumerate", parents=[common], help="One tree per isomorphism class of the given order"
    )
    enum_p.add_argument("--order", type=int, required=True)
    enum_p.set_defaults(handler=cmd_enumerate)

    inv_p = commands.add_parser(
        "invariants", parents=[common], help="Degree sequence, diameter, trunk and twigs"
    )
    inv_p.add_argument("--tree", required=True, help='Tree as "n; u-v, ...", e.g. "3;0-1,1-2"')
    inv_p.set_defaults(handler=cmd_invariants)

    code_p = commands.add_parser("code", parents=[common], help="Canonical (AHU) code")
    code_p.add_argument("--tree", required=True)
    code_p.set_defaults(handler=cmd_code)


def cmd_enumerate(args: argparse.Namespace, context: CliContext) -> CommandResult:
    order = validate_positive(args.order, "order")
    bound = context.config.TREE_ORDER_BOUND
    if order > bound:
        raise BoundExceededError("tree order", order, bound)
    lines = [format_tree(t) for t in enumerate_trees(order)]
    return CommandResult(lines=lines, data={"order": order, "count": len(lines), "trees": lines})


def cmd_invariants(args: argparse.Namespace, context: CliContext) -> CommandResult:
    t = parse_tree_spec(args.tree)
    degrees = degree_sequence(t)
    try:
        core = trunk(t)
        multiset = twigs(t)
        trunk_order, twig_text, twig_data = len(core), format_twigs(multiset), multiset.as_dict()
    except NoTrunkError:
        # paths carry no trunk; reported as a field
        trunk_order, twig_text, twig_data = None, "none", None

    lines = [
        f"order: {t.order}",
        f"degree_sequence: {format_int_sequence(degrees.degrees)}",
        f"diameter: {diameter(t)}",
        f"center: {format_int_sequence(tree_center(t))}",
        f"trunk_order: {'none' if trunk_order is None else trunk_order}",
        f"twigs: {twig_text}",
        f"canonical_code: {canonical_code(t)}",
    ]
    data = {
        "order": t.order,
        "degree_sequence": list(degrees.degrees),
        "diameter": diameter(t),
        "center": list(tree_center(t)),
        "trunk_order": trunk_order,
        "twigs": None if twig_data is None else {str(k): v for k, v in twig_data.items()},
        "canonical_code": str(canonical_code(t)),
    }
    return CommandResult(lines=lines, data=data)


def cmd_code(args: argparse.Namespace, context: CliContext) -> CommandResult:
    code = str(canonical_code(parse_tree_spec(args.tree)))
    return CommandResult(lines=[code], data={"canonical_code": code})
