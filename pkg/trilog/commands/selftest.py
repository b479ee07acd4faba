import argparse
import logging
import random
from typing import Any

from trilog.commands.base import PARAMS_OPTION, SEED_OPTION, BaseCommand, CommandMeta, CommandOption
from trilog.compress import (
    compress_from_pairings,
    random_invertible_matrix,
    synth_pairing_tuple,
    transmitted_tuple,
)
from trilog.dlog import digits_to_integer, naive_ph, ph_dlp, traverse_recursive
from trilog.errors import ConsistencyError
from trilog.field import CyclotomicElement, cyc_pow, fp2_mul, sample_mu_generator
from trilog.params import MAX_W, ParamSet, resolve_params
from trilog.strategy import strategy_for
from trilog.tables import build_table, select_base

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 4096


def _check_subgroup(ps: ParamSet, rng: random.Random, trials: int) -> tuple[dict, list[dict]]:
    g = sample_mu_generator(ps.modulus, ps.ell, ps.e_ell, rng.randrange(2**32))
    sel = select_base(g, ps)
    table = build_table(sel, ps)
    strategy = strategy_for(ps)
    exhaustive = ps.order <= EXHAUSTIVE_LIMIT
    failures = []
    checks = 0

    if exhaustive:
        cases = []
        h = CyclotomicElement.identity(ps.p)
        for x in range(ps.order):
            cases.append((x, h))
            h = fp2_mul(h, g)
    else:
        cases = [(x, cyc_pow(g, x)) for x in (rng.randrange(ps.order) for _ in range(trials))]

    for x, h in cases:
        D = ph_dlp(h, strategy, table, sel, ps)
        got = digits_to_integer(D, ps)
        leading = traverse_recursive(h, strategy, table, ps).digits
        naive = naive_ph(h, g, ps) if exhaustive else x
        checks += 1
        if got != x or naive != x or leading != D.digits[: ps.n_rows]:
            failures.append({"ell": ps.ell, "w": ps.w, "x": x, "got": got, "naive": naive})

    for d1_unit in (True, False):
        matrix = random_invertible_matrix(ps, rng, d1_unit)
        tup = synth_pairing_tuple(ps, matrix, rng.randrange(2**32))
        key = compress_from_pairings(tup, ps, strategy)
        checks += 1
        if key != transmitted_tuple(matrix, ps) or key.flag != (0 if d1_unit else 1):
            failures.append({"ell": ps.ell, "w": ps.w, "matrix": list(matrix), "key": key.model_dump()})

    config = {**ps.describe(), "exhaustive": exhaustive, "checks": checks}
    logger.debug("selftest %s: %d checks, %d failures", config, checks, len(failures))
    return config, failures


class SelftestCommand(BaseCommand):
    meta = CommandMeta(
        id="selftest",
        label="Self-test",
        description="Oracle checks of every window for both subgroups; exhaustive on small groups.",
        options=[
            PARAMS_OPTION,
            CommandOption(flag="--trials", kind="int", default=100, help="random exponents per window on large groups"),
            SEED_OPTION,
        ],
    )

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        family = resolve_params(args.params)
        rng = random.Random(args.seed)
        configs = []
        failures: list[dict] = []
        for ell in (2, 3):
            e_ell = family.e2 if ell == 2 else family.e3
            for w in range(1, min(e_ell, MAX_W) + 1):
                config, failed = _check_subgroup(family.subgroup(ell, w), rng, args.trials)
                configs.append(config)
                failures.extend(failed)
        total = sum(c["checks"] for c in configs)
        if failures:
            raise ConsistencyError(f"selftest: {len(failures)} of {total} checks failed, first: {failures[0]}")
        return {"params": family.name, "checks": total, "failures": 0, "configs": configs}
