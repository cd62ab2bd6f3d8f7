"""`poly` commands: CSF, U-polynomial, L-polynomial and the finite-colour CSF."""

import argparse

from csfkit.cli.dependencies import CliContext, CommandResult
from csfkit.core.compositions import l_polynomial
from csfkit.core.symmetric import csf_by_colorings, csf_power_sum
from csfkit.core.upoly import restrict_min_part, upoly_naive, upoly_tree_dp
from csfkit.models.polynomial import SparsePolynomial
from csfkit.utils.errors import BoundExceededError
from csfkit.utils.formatters import (
    format_polynomial,
    format_truncated_polynomial,
    polynomial_to_json,
    truncated_polynomial_to_json,
)
from csfkit.utils.validators import parse_composition, parse_tree_spec, validate_q


def register(subparsers, common: argparse.ArgumentParser) -> None:
    poly_p = subparsers.add_parser("poly", help="Symmetric-function invariants")
    commands = poly_p.add_subparsers(dest="poly_command", required=True)

    csf_p = commands.add_parser("csf", parents=[common], help="CSF in the power-sum basis")
    csf_p.add_argument("--tree", required=True)
    csf_p.set_defaults(handler=cmd_csf)

    upoly_p = commands.add_parser("upoly", parents=[common], help="U-polynomial of a tree")
    upoly_p.add_argument("--tree", required=True)
    upoly_p.add_argument("--restrict", type=int, default=None, metavar="Q",
                         help="Set x_1..x_Q to zero")
    upoly_p.add_argument("--method", choices=["dp", "naive"], default="dp")
    upoly_p.set_defaults(handler=cmd_upoly)

    lpoly_p = commands.add_parser("lpoly", parents=[common], help="L-polynomial of a composition")
    lpoly_p.add_argument("--comp", required=True, help='Composition, e.g. "2 2 1 2"')
    lpoly_p.set_defaults(handler=cmd_lpoly)

    col_p = commands.add_parser(
        "colorings", parents=[common], help="CSF in m variables by counting proper colourings"
    )
    col_p.add_argument("--tree", required=True)
    col_p.add_argument("--colors", type=int, required=True)
    col_p.set_defaults(handler=cmd_colorings)


def _poly_result(p: SparsePolynomial) -> CommandResult:
    return CommandResult(lines=[format_polynomial(p)], data=polynomial_to_json(p))


def cmd_csf(args: argparse.Namespace, context: CliContext) -> CommandResult:
    t = parse_tree_spec(args.tree)
    return _poly_result(csf_power_sum(t, context.config.CSF_ORDER_BOUND, context.config.THREADS))


def cmd_upoly(args: argparse.Namespace, context: CliContext) -> CommandResult:
    t = parse_tree_spec(args.tree)
    if args.method == "naive":
        u = upoly_naive(t, context.config.CSF_ORDER_BOUND, context.config.THREADS)
    else:
        if t.order > context.config.TREE_ORDER_BOUND:
            raise BoundExceededError("tree order", t.order, context.config.TREE_ORDER_BOUND)
        u = upoly_tree_dp(t)
    if args.restrict is not None:
        u = restrict_min_part(u, validate_q(args.restrict, minimum=0))
    return _poly_result(u)


def cmd_lpoly(args: argparse.Namespace, context: CliContext) -> CommandResult:
    return _poly_result(l_polynomial(parse_composition(args.comp)))


def cmd_colorings(args: argparse.Namespace, context: CliContext) -> CommandResult:
    t = parse_tree_spec(args.tree)
    p = csf_by_colorings(t, args.colors)
    return CommandResult(lines=[format_truncated_polynomial(p)], data=truncated_polynomial_to_json(p))
