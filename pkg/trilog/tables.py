"""Runtime base selection and signed-digit lookup tables."""

import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from trilog.errors import DegenerateInputError
from trilog.field import CyclotomicElement, cyc_cube, cyc_sqr, fp2_mul
from trilog.params import ParamSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseSelection:
    """Which candidate became the base, and the powers recorded while checking it.

    first_column[i] = base^(ell^(m + w*i)); power_cache[j] = base^(ell^j) for
    j in 0..e_ell-m.
    """

    label: int
    first_column: tuple[CyclotomicElement, ...]
    power_cache: tuple[CyclotomicElement, ...]

    @property
    def base(self) -> CyclotomicElement:
        return self.power_cache[0]


@dataclass(frozen=True)
class DlogTable:
    """rows[i][j] = base^((j+1) * L^i * ell^m)."""

    rows: tuple[tuple[CyclotomicElement, ...], ...]
    params: ParamSet

    @property
    def last_row(self) -> tuple[CyclotomicElement, ...]:
        return self.rows[-1]

    def entry(self, i: int, j: int) -> CyclotomicElement:
        return self.rows[i][j]


def select_base(r: CyclotomicElement, params: ParamSet, label: int = 1) -> BaseSelection:
    """Check that r generates mu_{ell^e_ell} by repeated ell-powering.

    Fails at the first power that hits 1, or when r^(ell^e_ell) is not 1.
    """
    step = cyc_sqr if params.ell == 2 else cyc_cube
    e, m, w = params.e_ell, params.m, params.w
    if r.is_one():
        raise DegenerateInputError("candidate base is the identity")
    chain = [r]
    x = r
    for i in range(1, e):
        x = step(x)
        if x.is_one():
            raise DegenerateInputError(f"candidate base has order {params.ell}^{i}, not {params.ell}^{e}")
        chain.append(x)
    top = step(x)
    if not top.is_one():
        raise DegenerateInputError(f"candidate base is not in mu_{params.ell}^{e}")
    cache = chain[: e - m + 1]
    if m == 0:
        cache.append(top)
    column = tuple(chain[m + w * i] for i in range(params.n_rows))
    return BaseSelection(label=label, first_column=column, power_cache=tuple(cache))


def choose_base(r1: CyclotomicElement, r2: CyclotomicElement, params: ParamSet) -> BaseSelection:
    """Prefer r2 (label 1); fall back to r1 (label 0)."""
    try:
        sel = select_base(r2, params, label=1)
    except DegenerateInputError as exc:
        logger.debug("r2 rejected as base: %s", exc.message)
        try:
            sel = select_base(r1, params, label=0)
        except DegenerateInputError:
            raise DegenerateInputError(
                f"neither r1 nor r2 generates mu_{params.ell}^{params.e_ell}"
            ) from None
    logger.debug("base selected: label=%d", sel.label)
    return sel


def build_table(sel: BaseSelection, params: ParamSet) -> DlogTable:
    """Fill every row from its head with one squaring, cubing or multiplication per entry."""
    n_cols = params.n_cols
    rows = []
    for head in sel.first_column:
        row = [head]
        for j in range(1, n_cols):
            if j % 2 == 1:
                row.append(cyc_sqr(row[(j - 1) // 2]))
            elif j % 3 == 2:
                row.append(cyc_cube(row[(j - 2) // 3]))
            else:
                row.append(fp2_mul(row[j - 1], head))
        rows.append(tuple(row))
    logger.debug("table built: %d rows x %d columns", len(rows), n_cols)
    return DlogTable(rows=tuple(rows), params=params)


def table_bytes(params: ParamSet) -> int:
    return params.n_rows * params.n_cols * 2 * params.modulus.fp_bytes


def table_kib(params: ParamSet) -> float:
    kib = Decimal(table_bytes(params)) / Decimal(1024)
    return float(kib.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
