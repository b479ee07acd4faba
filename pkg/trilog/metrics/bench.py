"""Cost model runs: average m-equivalent cost of compression per window size."""

import logging
import random
from collections.abc import Callable, Iterable
from fractions import Fraction

from pydantic import BaseModel

from trilog.compress import (
    prepare_base,
    random_invertible_matrix,
    solve_transmitted,
    synth_pairing_tuple,
    transmitted_tuple,
)
from trilog.errors import ConsistencyError, ParameterError
from trilog.metrics.counter import OpCounts, counting, snapshot_and_reset
from trilog.params import MAX_W, ParamSet
from trilog.strategy import strategy_for
from trilog.tables import table_kib

logger = logging.getLogger(__name__)

# Published per-window estimates for three logarithms, keyed by (set, ell).
REFERENCE_COSTS: dict[tuple[str, int], dict[int, float]] = {
    ("SIKEp434", 3): {1: 8892.6, 2: 6904.3, 3: 6463.3, 4: 7603.0, 6: 21915.0},
    ("SIKEp434", 2): {1: 11762.4, 2: 7516.0, 3: 6083.6, 4: 5544.6, 6: 6232.4},
    ("SIKEp503", 3): {1: 10780.3, 2: 8223.7, 3: 6859.0, 4: 8869.8, 6: 21960.0},
    ("SIKEp503", 2): {1: 13968.6, 2: 8902.2, 3: 8061.4, 4: 7441.7, 6: 8187.1},
    ("SIKEp610", 3): {1: 13477.5, 2: 9237.5, 3: 8552.2, 4: 9990.5, 6: 30941.8},
    ("SIKEp610", 2): {1: 17650.2, 2: 12327.2, 3: 9542.4, 4: 9404.8, 6: 10256.6},
    ("SIKEp751", 3): {1: 17354.3, 2: 13265.9, 3: 12326.8, 4: 14076.5, 6: 39564.4},
    ("SIKEp751", 2): {1: 22181.4, 2: 14334.4, 3: 11594.0, 4: 10539.0, 6: 11552.0},
}

DEFAULT_W_SET = (1, 2, 3, 4, 6)


class CostReport(BaseModel):
    params: str
    ell: int
    e_ell: int
    per_w: dict[int, float]
    per_w_measured: dict[int, float]
    per_w_exclusive: dict[int, float]
    table_kib: dict[int, float]
    argmin_w: int | None = None
    basis: str | None = None
    deviation: dict[int, float] = {}
    trials: int
    seed: int


def _mean(total: Fraction, trials: int) -> float:
    return round(float(total / trials), 1)


def _bench_one(params: ParamSet, trials: int, seed: int) -> dict[str, float]:
    strategy = strategy_for(params)
    rng = random.Random(seed)
    inclusive = measured = exclusive = Fraction(0)
    for trial in range(trials):
        matrix = random_invertible_matrix(params, rng)
        tup = synth_pairing_tuple(params, matrix, rng.randrange(2**32))
        with counting() as counter:
            sel, table = prepare_base(tup, params)
            build: OpCounts = snapshot_and_reset(counter)
            key = solve_transmitted(tup, sel, table, strategy, params)
            solve: OpCounts = snapshot_and_reset(counter)
        if key != transmitted_tuple(matrix, params):
            raise ConsistencyError(f"trial {trial}: compressed key does not match matrix {matrix}")
        total = build.merge(solve)
        inclusive += total.model_cost()
        measured += total.measured_cost()
        exclusive += solve.model_cost()
        logger.debug("w=%d trial %d: %s", params.w, trial, total.model_cost())
    return {
        "inclusive": _mean(inclusive, trials),
        "measured": _mean(measured, trials),
        "exclusive": _mean(exclusive, trials),
    }


def _closest_basis(report: CostReport, reference: dict[int, float]) -> tuple[str, dict[int, float]]:
    shared = [w for w in report.per_w if w in reference]
    candidates = {"inclusive": report.per_w, "exclusive": report.per_w_exclusive}
    best = None
    for name, values in candidates.items():
        dev = {w: round((values[w] - reference[w]) / reference[w], 4) for w in shared}
        score = sum(abs(v) for v in dev.values())
        if best is None or score < best[0]:
            best = (score, name, dev)
    return best[1], best[2]


def run_cost_bench(
    params: ParamSet,
    w_set: Iterable[int] = DEFAULT_W_SET,
    trials: int = 100,
    seed: int = 0,
    on_w_start: Callable[[int], None] | None = None,
    on_w_done: Callable[[int, dict], None] | None = None,
    on_w_error: Callable[[int, Exception], None] | None = None,
) -> CostReport:
    """Average cost of base choice, table build and three logarithms for each w."""
    w_set = sorted(set(w_set))
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    if not w_set or any(not 1 <= w <= MAX_W for w in w_set):
        raise ParameterError(f"window sizes must lie in 1..{MAX_W}, got {w_set}")

    report = CostReport(
        params=params.name, ell=params.ell, e_ell=params.e_ell,
        per_w={}, per_w_measured={}, per_w_exclusive={}, table_kib={},
        trials=trials, seed=seed,
    )
    for w in w_set:
        if w > params.e_ell:
            logger.warning("skipping w=%d: larger than e_ell=%d", w, params.e_ell)
            continue
        ps = params.with_w(w)
        if on_w_start:
            on_w_start(w)
        try:
            row = _bench_one(ps, trials, seed)
        except Exception as exc:
            if on_w_error:
                on_w_error(w, exc)
            raise  # stop on first error
        report.per_w[w] = row["inclusive"]
        report.per_w_measured[w] = row["measured"]
        report.per_w_exclusive[w] = row["exclusive"]
        report.table_kib[w] = table_kib(ps)
        logger.info("%s ell=%d w=%d: %.1f m", params.name, params.ell, w, row["inclusive"])
        if on_w_done:
            on_w_done(w, row)

    if report.per_w:
        report.argmin_w = min(report.per_w, key=lambda w: (report.per_w[w], w))
    reference = REFERENCE_COSTS.get((params.name, params.ell))
    if reference and any(w in reference for w in report.per_w):
        report.basis, report.deviation = _closest_basis(report, reference)
    return report
