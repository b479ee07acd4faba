"""Discrete logarithms in mu_{ell^e_ell} with signed digits and an optimal strategy.

Digits come out signed: D[k] in [-ceil((L-1)/2), ceil((L-1)/2)] with L = ell^w,
and the end-to-end contract is base^value(D) = h. Negative digits reuse
table entries through conjugation, which is free on the unit circle.
"""

import logging

from pydantic import BaseModel, ConfigDict

from trilog.errors import ConsistencyError, DigitRangeError, NotInSubgroupError, ParameterError
from trilog.field import CyclotomicElement, cyc_conj_inv, cyc_pow, cyc_pow_ell, cyc_sqr, fp2_mul
from trilog.metrics.counter import tally_skipped
from trilog.params import ParamSet
from trilog.strategy import Strategy, strategy_for
from trilog.tables import BaseSelection, DlogTable, build_table, select_base

logger = logging.getLogger(__name__)


class SignedDigitArray(BaseModel):
    """Radix-ell^w signed digits, least significant first.

    With m = e_ell mod w > 0 a complete array carries one extra final digit
    weighted by L^floor(e_ell/w).
    """

    model_config = ConfigDict(frozen=True)

    digits: tuple[int, ...]
    ell: int
    w: int
    e_ell: int

    @property
    def L(self) -> int:
        return self.ell**self.w

    @property
    def m(self) -> int:
        return self.e_ell % self.w

    @property
    def complete(self) -> bool:
        return len(self.digits) == -(-self.e_ell // self.w)


def _digit_bound(radix: int) -> int:
    return -(-(radix - 1) // 2)


def small_dlp(h: CyclotomicElement, last_row: tuple[CyclotomicElement, ...], params: ParamSet) -> int:
    """Signed d with last_row[0]^d = h, by a linear scan of the row and its conjugates."""
    if h.is_one():
        return 0
    p = params.p
    conj_b = (p - h.b) % p
    for x, t in enumerate(last_row):
        if h.a != t.a:
            continue
        if h.b == t.b:
            return x + 1
        if conj_b == t.b:
            return -(x + 1)
    raise NotInSubgroupError(f"{h!r} is not in the order-{params.L} subgroup of the table")


def fast_power(
    digits: list[int] | tuple[int, ...],
    cache: tuple[CyclotomicElement, ...],
    params: ParamSet,
) -> CyclotomicElement:
    """C[0]^(sum D[k] * L^k) using only cached ell-powers of the base.

    Each |D[k]| is expanded in base ell starting at cache index w*k; a
    ternary 2 squares the cached element before multiplying it in.
    """
    ell, w = params.ell, params.w
    acc = None
    for k, d in enumerate(digits):
        if d == 0:
            continue
        mag = abs(d)
        idx = w * k
        while mag:
            mag, t = divmod(mag, ell)
            if t:
                if idx >= len(cache):
                    raise ParameterError(f"power cache has {len(cache)} entries, index {idx} needed")
                c = cache[idx]
                if d < 0:
                    c = cyc_conj_inv(c)
                if t == 2:
                    c = cyc_sqr(c)
                acc = c if acc is None else fp2_mul(acc, c)
            idx += 1
    return acc if acc is not None else CyclotomicElement.identity(params.p)


def _cancel(value: CyclotomicElement, entry: CyclotomicElement, d: int) -> CyclotomicElement:
    return fp2_mul(value, cyc_conj_inv(entry) if d > 0 else entry)


def ph_dlp(
    h: CyclotomicElement,
    strategy: Strategy,
    table: DlogTable,
    sel: BaseSelection,
    params: ParamSet,
) -> SignedDigitArray:
    """Pohlig-Hellman over the strategy, left-first, with an explicit stack.

    Stack entries are [value, row, steps]: the row of the table that cancels
    the next digit from value, and the left steps taken when it was pushed.
    """
    ell, w, m, n = params.ell, params.w, params.m, params.n_rows
    if strategy.n_leaves != n:
        raise ParameterError(f"strategy has {strategy.n_leaves} leaves, table has {n} rows")
    rows = table.rows
    last_row = table.last_row
    shifted = cyc_pow_ell(h, ell, m) if m else h

    splits = iter(strategy.splits)
    stack: list[list] = [[shifted, 0, 0]]
    digits = [0] * n
    j = k = 0
    while True:
        while j + k < n - 1:
            s = next(splits)
            j += s
            stack.append([cyc_pow_ell(stack[-1][0], ell, w * s), j + k, s])
        leaf = stack.pop()
        d = small_dlp(leaf[0], last_row, params)
        digits[k] = d
        if k == n - 1:
            break
        if d:
            col = abs(d) - 1
            for entry in stack:
                entry[0] = _cancel(entry[0], rows[entry[1]][col], d)
        else:
            tally_skipped(len(stack))
        for entry in stack:
            entry[1] += 1
        j -= leaf[2]
        k += 1
    if stack:
        raise ConsistencyError(f"{len(stack)} stack entries left after the last leaf")

    if m:
        rem = fp2_mul(h, cyc_conj_inv(fast_power(digits, sel.power_cache, params)))
        d = small_dlp(rem, last_row, params)
        scale = ell ** (w - m)
        if d % scale:
            raise ConsistencyError(f"final digit {d} is not a multiple of {ell}^{w - m}")
        digits.append(d // scale)
    return SignedDigitArray(digits=tuple(digits), ell=ell, w=w, e_ell=params.e_ell)


def traverse_recursive(
    h: CyclotomicElement,
    strategy: Strategy,
    table: DlogTable,
    params: ParamSet,
) -> SignedDigitArray:
    """Recursive traversal of the same strategy; yields the floor(e_ell/w) leading digits."""
    n = params.n_rows
    if strategy.n_leaves != n:
        raise ParameterError(f"strategy has {strategy.n_leaves} leaves, table has {n} rows")
    if params.m:
        h = cyc_pow_ell(h, params.ell, params.m)
    digits = [0] * n
    _traverse(h, 0, 0, n, iter(strategy.splits), table, params, digits)
    return SignedDigitArray(digits=tuple(digits), ell=params.ell, w=params.w, e_ell=params.e_ell)


def _traverse(value, j, k, z, splits, table, params, digits):
    # value sits j window steps below the root and still carries digits k..k+z-1
    if z == 1:
        digits[k] = small_dlp(value, table.last_row, params)
        return
    s = next(splits)
    left = cyc_pow_ell(value, params.ell, params.w * s)
    _traverse(left, j + s, k, z - s, splits, table, params, digits)
    for t in range(k, k + z - s):
        d = digits[t]
        if d:
            value = _cancel(value, table.rows[j + t][abs(d) - 1], d)
        else:
            tally_skipped(1)
    _traverse(value, j, k + z - s, s, splits, table, params, digits)


def naive_ph(h: CyclotomicElement, g: CyclotomicElement, params: ParamSet) -> int:
    """Digit-by-digit Pohlig-Hellman with unsigned ell-ary digits."""
    ell, e = params.ell, params.e_ell
    s = cyc_pow(g, ell ** (e - 1))
    powers = [CyclotomicElement.identity(params.p)]
    for _ in range(ell - 1):
        powers.append(fp2_mul(powers[-1], s))
    x = 0
    for k in range(e):
        probe = cyc_pow(fp2_mul(h, cyc_pow(g, -x)), ell ** (e - 1 - k))
        try:
            d = powers.index(probe)
        except ValueError:
            raise NotInSubgroupError(f"{h!r} is not in the subgroup generated by {g!r}") from None
        x += d * ell**k
    if cyc_pow(g, x) != h:
        raise NotInSubgroupError(f"{h!r} is not in the subgroup generated by {g!r}")
    return x


def digits_to_integer(D: SignedDigitArray, params: ParamSet) -> int:
    """Canonical exponent in [0, ell^e_ell) for a signed digit array.

    An array of only the floor(e_ell/w) leading digits is read as if the
    final digit were 0.
    """
    if (D.ell, D.w, D.e_ell) != (params.ell, params.w, params.e_ell):
        raise ParameterError(f"digits for ell={D.ell}, w={D.w}, e={D.e_ell} do not match {params.describe()}")
    n = params.n_rows
    if len(D.digits) not in (n, params.n_digits):
        raise DigitRangeError(f"expected {n} or {params.n_digits} digits, got {len(D.digits)}")
    L = params.L
    bound = _digit_bound(L)
    value = 0
    for k, d in enumerate(D.digits[:n]):
        if abs(d) > bound:
            raise DigitRangeError(f"digit D[{k}]={d} outside [-{bound}, {bound}]")
        value += d * L**k
    if len(D.digits) > n:
        d = D.digits[n]
        bound = _digit_bound(params.ell**params.m)
        if abs(d) > bound:
            raise DigitRangeError(f"final digit {d} outside [-{bound}, {bound}]")
        value += d * L**n
    return value % params.order


def solve_dlog(
    h: CyclotomicElement,
    g: CyclotomicElement,
    params: ParamSet,
    strategy: Strategy | None = None,
) -> SignedDigitArray:
    """Table from g at runtime, then one ph_dlp."""
    sel = select_base(g, params)
    table = build_table(sel, params)
    digits = ph_dlp(h, strategy or strategy_for(params), table, sel, params)
    logger.debug("solved dlog with %d digits", len(digits.digits))
    return digits
