import argparse
from typing import Any

from trilog.commands.base import (
    ELL_OPTION,
    PARAMS_OPTION,
    W_OPTION,
    BaseCommand,
    CommandMeta,
    CommandOption,
    subgroup_from_args,
)
from trilog.dlog import digits_to_integer, solve_dlog
from trilog.field import CyclotomicElement
from trilog.metrics.counter import counting


class SolveCommand(BaseCommand):
    meta = CommandMeta(
        id="solve",
        label="Solve",
        description="One discrete logarithm: table from --base at runtime, then the strategy traversal.",
        options=[
            PARAMS_OPTION,
            ELL_OPTION,
            W_OPTION,
            CommandOption(flag="--base", required=True, help="generator, hex 're,im'"),
            CommandOption(flag="--challenge", required=True, help="element to solve for, hex 're,im'"),
        ],
    )

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        params = subgroup_from_args(args)
        g = CyclotomicElement.from_hex(params.p, args.base)
        h = CyclotomicElement.from_hex(params.p, args.challenge)
        with counting() as counter:
            digits = solve_dlog(h, g, params)
        return {
            **params.describe(),
            "digits": list(digits.digits),
            "value": digits_to_integer(digits, params),
            "op_counts": counter.snapshot().model_dump(),
        }
