"""Optimal traversal strategies for the Pohlig-Hellman triangle.

A strategy for n leaves is stored as the list of split values a left-first
traversal consumes. A split s taken at a vertex with z leaves below it
means: walk s left edges (each an ell^w-power), solve the z - s leaves
under the new vertex, then continue with the s leaves the stored vertex
still covers. Pre-order emission is S(z) = [s] + S(z - s) + S(s).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, PositiveInt

from trilog.errors import ParameterError, StrategyError
from trilog.params import ParamSet

logger = logging.getLogger(__name__)

# Left-edge cost per window step, in tenths of m: ell=2 squares at 2s=1.6m,
# ell=3 cubes at s+2m=2.8m. A right edge is one F_{p^2} multiplication (3m).
_STEP_TENTHS = {2: 16, 3: 28}
_RIGHT_TENTHS = 30


class StrategyWeights(BaseModel):
    """Edge costs held in tenths of one F_p multiplication."""

    model_config = ConfigDict(frozen=True)

    left_tenths: PositiveInt
    right_tenths: PositiveInt

    @property
    def left(self) -> Fraction:
        return Fraction(self.left_tenths, 10)

    @property
    def right(self) -> Fraction:
        return Fraction(self.right_tenths, 10)

    @classmethod
    def from_m(cls, left: float | str | Fraction, right: float | str | Fraction) -> "StrategyWeights":
        """Weights given in m-units, e.g. from_m("6.4", 3)."""
        tenths = []
        for value in (left, right):
            try:
                t = Fraction(value if isinstance(value, Fraction) else str(value)) * 10
            except ValueError:
                raise ParameterError(f"edge weight {value!r} is not a number") from None
            if t.denominator != 1 or t <= 0:
                raise ParameterError(f"edge weight {value} is not a positive whole number of tenths")
            tenths.append(int(t))
        return cls(left_tenths=tenths[0], right_tenths=tenths[1])

    @classmethod
    def for_params(cls, params: ParamSet) -> "StrategyWeights":
        return cls(left_tenths=_STEP_TENTHS[params.ell] * params.w, right_tenths=_RIGHT_TENTHS)


@dataclass(frozen=True)
class Strategy:
    splits: tuple[int, ...]
    n_leaves: int

    def __post_init__(self):
        object.__setattr__(self, "splits", tuple(self.splits))
        self.replay()

    def replay(self) -> tuple[int, int]:
        """Walk the traversal; return (left_edges, right_edges).

        Raises StrategyError unless the splits visit exactly n_leaves leaves.
        """
        n = self.n_leaves
        if n < 1:
            raise StrategyError(f"a strategy needs at least one leaf, got {n}")
        splits = iter(self.splits)
        stack = [0]
        j = k = 0
        left = right = 0
        while True:
            while j + k < n - 1:
                s = next(splits, None)
                if s is None:
                    raise StrategyError(f"splits run out after {k} of {n} leaves")
                if not 1 <= s <= n - 1 - (j + k):
                    raise StrategyError(f"split {s} does not fit a vertex with {n - (j + k)} leaves")
                left += s
                j += s
                stack.append(s)
            steps = stack.pop()
            if k == n - 1:
                break
            right += len(stack)
            j -= steps
            k += 1
        if stack or next(splits, None) is not None:
            raise StrategyError(f"splits do not describe a strategy for {n} leaves")
        return left, right


def optimal_strategy(n: int, weights: StrategyWeights) -> tuple[Strategy, Fraction]:
    """Minimal-cost strategy for n leaves and its cost in m-units.

    C(z) = min over 1 <= i <= z-1 of C(i) + C(z-i) + (z-i)*left + i*right,
    ties going to the smallest i.
    """
    if n < 1:
        raise ParameterError(f"strategy needs n >= 1, got {n}")
    p, q = weights.left_tenths, weights.right_tenths
    cost = [0] * (n + 1)
    split = [0] * (n + 1)
    for z in range(2, n + 1):
        best = None
        best_i = 0
        for i in range(1, z):
            c = cost[i] + cost[z - i] + (z - i) * p + i * q
            if best is None or c < best:
                best, best_i = c, i
        cost[z] = best
        split[z] = z - best_i

    out: list[int] = []
    todo = [n]
    while todo:
        z = todo.pop()
        if z <= 1:
            continue
        s = split[z]
        out.append(s)
        todo.append(s)
        todo.append(z - s)
    total = Fraction(cost[n], 10)
    logger.debug("optimal strategy n=%d left=%s right=%s cost=%s", n, weights.left, weights.right, total)
    return Strategy(tuple(out), n), total


def strategy_cost(strategy: Strategy, weights: StrategyWeights) -> Fraction:
    left, right = strategy.replay()
    return left * weights.left + right * weights.right


def strategy_for(params: ParamSet) -> Strategy:
    """Optimal strategy for the table rows of `params`."""
    strategy, _ = optimal_strategy(params.n_rows, StrategyWeights.for_params(params))
    return strategy
