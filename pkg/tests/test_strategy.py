"""Tests for optimal strategies."""

import time
from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest

from trilog.errors import ParameterError, StrategyError
from trilog.params import load_named
from trilog.strategy import Strategy, StrategyWeights, optimal_strategy, strategy_cost

WEIGHT_GRID = ["1", "1.6", "2.8", "3", "6.4"]


@lru_cache(maxsize=None)
def _all_split_vectors(z: int) -> tuple[tuple[int, ...], ...]:
    """Every full strategy for z leaves, in pre-order split form."""
    if z == 1:
        return ((),)
    out = []
    for s in range(1, z):
        for left in _all_split_vectors(z - s):
            for right in _all_split_vectors(s):
                out.append((s,) + left + right)
    return tuple(out)


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------


class TestWeights:
    def test_from_m(self):
        w = StrategyWeights.from_m("1.6", 3)
        assert (w.left_tenths, w.right_tenths) == (16, 30)
        assert w.left == Fraction(8, 5)

    def test_rejects_sub_tenths(self):
        with pytest.raises(ParameterError, match="tenths"):
            StrategyWeights.from_m("1.65", 3)

    def test_rejects_non_numeric(self):
        with pytest.raises(ParameterError, match="not a number"):
            StrategyWeights.from_m("abc", 3)

    def test_rejects_non_positive(self):
        with pytest.raises(ParameterError):
            StrategyWeights.from_m(0, 3)

    def test_for_params(self):
        family = load_named("SIKEp434")
        w2 = StrategyWeights.for_params(family.subgroup(2, 4))
        w3 = StrategyWeights.for_params(family.subgroup(3, 3))
        assert (w2.left, w2.right) == (Fraction("6.4"), 3)
        assert (w3.left, w3.right) == (Fraction("8.4"), 3)


# ---------------------------------------------------------------------------
# Dynamic program
# ---------------------------------------------------------------------------


class TestOptimalStrategy:
    def test_single_leaf(self):
        strategy, cost = optimal_strategy(1, StrategyWeights.from_m(5, 7))
        assert strategy.splits == ()
        assert cost == 0

    def test_two_leaves(self):
        strategy, cost = optimal_strategy(2, StrategyWeights.from_m(1, 1))
        assert strategy.splits == (1,)
        assert cost == 2

    def test_zero_leaves(self):
        with pytest.raises(ParameterError, match="n >= 1"):
            optimal_strategy(0, StrategyWeights.from_m(1, 1))

    def test_split_count(self):
        strategy, _ = optimal_strategy(50, StrategyWeights.from_m("6.4", 3))
        assert len(strategy.splits) == 49

    @pytest.mark.parametrize("left,right", list(product(WEIGHT_GRID, WEIGHT_GRID)))
    def test_matches_exhaustive_enumeration(self, left, right):
        weights = StrategyWeights.from_m(left, right)
        for n in range(1, 9):
            best = min(strategy_cost(Strategy(s, n), weights) for s in _all_split_vectors(n))
            _, cost = optimal_strategy(n, weights)
            assert cost == best, (n, left, right)

    def test_replay_cost_equals_reported(self):
        weights = StrategyWeights.from_m("2.8", 3)
        for n in (1, 2, 3, 7, 45, 137, 239):
            strategy, cost = optimal_strategy(n, weights)
            assert strategy_cost(strategy, weights) == cost

    def test_239_leaves_within_budget(self):
        weights = StrategyWeights.from_m("2.8", 3)
        start = time.perf_counter()
        strategy, cost = optimal_strategy(239, weights)
        assert time.perf_counter() - start < 0.1
        assert strategy_cost(strategy, weights) == cost

    def test_monotone_in_n(self):
        weights = StrategyWeights.from_m("1.6", 3)
        costs = [optimal_strategy(n, weights)[1] for n in range(1, 60)]
        assert costs == sorted(costs)

    def test_scale_equivariance(self):
        a = StrategyWeights.from_m("1.6", 3)
        b = StrategyWeights.from_m("4.8", 9)
        for n in (5, 17, 54):
            sa, ca = optimal_strategy(n, a)
            sb, cb = optimal_strategy(n, b)
            assert cb == 3 * ca
            assert sa.splits == sb.splits

    def test_ties_go_to_smallest_i(self):
        # n=3, equal weights: i=1 and i=2 both cost 5; i=1 means split s=2
        strategy, cost = optimal_strategy(3, StrategyWeights.from_m(1, 1))
        assert cost == 5
        assert strategy.splits[0] == 2


# ---------------------------------------------------------------------------
# Replay and validation
# ---------------------------------------------------------------------------


class TestStrategy:
    def test_replay_two_leaves(self):
        assert Strategy((1,), 2).replay() == (1, 1)

    def test_replay_deep_first(self):
        assert Strategy((2, 1), 3).replay() == (3, 2)

    def test_replay_comb(self):
        assert Strategy((1, 1), 3).replay() == (2, 3)

    def test_split_too_large(self):
        with pytest.raises(StrategyError, match="does not fit"):
            Strategy((2,), 2)

    def test_too_few_splits(self):
        with pytest.raises(StrategyError, match="run out"):
            Strategy((), 3)

    def test_too_many_splits(self):
        with pytest.raises(StrategyError):
            Strategy((1, 1), 2)

    def test_zero_leaves(self):
        with pytest.raises(StrategyError):
            Strategy((), 0)

    def test_list_input_frozen_to_tuple(self):
        assert Strategy([1], 2).splits == (1,)
