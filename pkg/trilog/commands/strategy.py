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
from trilog.errors import ParameterError, UsageError
from trilog.strategy import StrategyWeights, optimal_strategy


class StrategyCommand(BaseCommand):
    meta = CommandMeta(
        id="strategy",
        label="Strategy",
        description="Optimal traversal strategy and its cost, for a parameter set or explicit weights.",
        options=[
            PARAMS_OPTION,
            ELL_OPTION,
            W_OPTION,
            CommandOption(flag="--n", kind="int", help="leaf count; needs --left and --right"),
            CommandOption(flag="--left", help="cost of one left edge in m, e.g. 6.4"),
            CommandOption(flag="--right", help="cost of one right edge in m, e.g. 3"),
        ],
    )

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        explicit = (args.n, args.left, args.right)
        if any(v is not None for v in explicit):
            if any(v is None for v in explicit):
                raise UsageError("--n, --left and --right go together")
            n = args.n
            try:
                weights = StrategyWeights.from_m(args.left, args.right)
            except ParameterError as exc:
                raise UsageError(exc.message) from None
            result: dict[str, Any] = {}
        else:
            params = subgroup_from_args(args)
            n = params.n_rows
            weights = StrategyWeights.for_params(params)
            result = params.describe()
        strategy, cost = optimal_strategy(n, weights)
        left, right = strategy.replay()
        result.update({
            "n": n,
            "left_weight": str(weights.left),
            "right_weight": str(weights.right),
            "splits": list(strategy.splits),
            "left_edges": left,
            "right_edges": right,
            "cost": float(cost),
            "cost_exact": str(cost),
        })
        return result
