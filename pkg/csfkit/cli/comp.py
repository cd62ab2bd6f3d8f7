"""`comp` commands: the composition monoid."""

import argparse

from csfkit.cli.dependencies import CliContext, CommandResult
from csfkit.config.constants import MAX_SUBSET_ENUMERATION_ORDER
from csfkit.core.compositions import (
    coarsenings,
    compose,
    irreducible_factorization,
    l_equivalence_class,
    refines,
    reverse,
)
from csfkit.utils.errors import BoundExceededError
from csfkit.utils.validators import parse_composition


def register(subparsers, common: argparse.ArgumentParser) -> None:
    comp_p = subparsers.add_parser("comp", help="Integer compositions")
    commands = comp_p.add_subparsers(dest="comp_command", required=True)

    compose_p = commands.add_parser("compose", parents=[common], help="The product a o b")
    compose_p.add_argument("--a", required=True)
    compose_p.add_argument("--b", required=True)
    compose_p.set_defaults(handler=cmd_compose)

    factor_p = commands.add_parser("factor", parents=[common], help="Irreducible factorization")
    factor_p.add_argument("--comp", required=True)
    factor_p.set_defaults(handler=cmd_factor)

    eq_p = commands.add_parser(
        "eqclass", parents=[common], help="Compositions sharing the L-polynomial"
    )
    eq_p.add_argument("--comp", required=True)
    eq_p.set_defaults(handler=cmd_eqclass)

    rev_p = commands.add_parser("reverse", parents=[common], help="Reversed composition")
    rev_p.add_argument("--comp", required=True)
    rev_p.set_defaults(handler=cmd_reverse)

    coarsen_p = commands.add_parser("coarsen", parents=[common], help="Every coarsening")
    coarsen_p.add_argument("--comp", required=True)
    coarsen_p.set_defaults(handler=cmd_coarsen)

    refines_p = commands.add_parser("refines", parents=[common], help="Whether a refines b")
    refines_p.add_argument("--a", required=True)
    refines_p.add_argument("--b", required=True)
    refines_p.set_defaults(handler=cmd_refines)


def cmd_compose(args: argparse.Namespace, context: CliContext) -> CommandResult:
    result = compose(parse_composition(args.a), parse_composition(args.b))
    return CommandResult(lines=[str(result)], data={"composition": list(result.parts)})


def cmd_factor(args: argparse.Namespace, context: CliContext) -> CommandResult:
    factorization = irreducible_factorization(parse_composition(args.comp))
    return CommandResult(
        lines=[str(factorization)],
        data={"factors": [list(f.parts) for f in factorization.factors]},
    )


def cmd_eqclass(args: argparse.Namespace, context: CliContext) -> CommandResult:
    members = sorted(l_equivalence_class(parse_composition(args.comp)))
    return CommandResult(
        lines=[str(m) for m in members],
        data={"class": [list(m.parts) for m in members]},
    )


def cmd_reverse(args: argparse.Namespace, context: CliContext) -> CommandResult:
    result = reverse(parse_composition(args.comp))
    return CommandResult(lines=[str(result)], data={"composition": list(result.parts)})


def cmd_coarsen(args: argparse.Namespace, context: CliContext) -> CommandResult:
    a = parse_composition(args.comp)
    if a.length > MAX_SUBSET_ENUMERATION_ORDER:
        raise BoundExceededError("composition length", a.length, MAX_SUBSET_ENUMERATION_ORDER)
    found = list(coarsenings(a))
    return CommandResult(
        lines=[str(c) for c in found],
        data={"coarsenings": [list(c.parts) for c in found]},
    )


def cmd_refines(args: argparse.Namespace, context: CliContext) -> CommandResult:
    answer = refines(parse_composition(args.a), parse_composition(args.b))
    return CommandResult(lines=["true" if answer else "false"], data={"refines": answer})
