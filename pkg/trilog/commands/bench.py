import argparse
import logging
from typing import Any

from trilog.commands.base import (
    ELL_OPTION,
    PARAMS_OPTION,
    SEED_OPTION,
    W_SET_OPTION,
    BaseCommand,
    CommandMeta,
    CommandOption,
    parse_int_list,
)
from trilog.metrics.bench import run_cost_bench
from trilog.params import resolve_params

logger = logging.getLogger(__name__)


class BenchCommand(BaseCommand):
    meta = CommandMeta(
        id="bench",
        label="Cost bench",
        description="Average m-equivalent cost of compression per window size.",
        options=[
            PARAMS_OPTION,
            ELL_OPTION,
            W_SET_OPTION,
            CommandOption(flag="--trials", kind="int", default=100, help="synthetic tuples per window"),
            SEED_OPTION,
        ],
    )

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        params = resolve_params(args.params).subgroup(args.ell)
        report = run_cost_bench(
            params,
            w_set=parse_int_list(args.w_set, "--w-set"),
            trials=args.trials,
            seed=args.seed,
            on_w_start=lambda w: logger.info("bench w=%d started", w),
            on_w_error=lambda w, exc: logger.error("bench w=%d failed: %s", w, exc),
        )
        return report.model_dump(mode="json")
