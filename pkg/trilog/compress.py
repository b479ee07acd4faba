"""Compressed-key assembly from the pairing values r0..r4 with three discrete logarithms.

With (c0, d0, c1, d1) the change-of-basis matrix, the pairing values are
r0, r1 = r0^d0, r2 = r0^d1, r3 = r0^-c0, r4 = r0^-c1. Taking logarithms to
base r2 (or r1 when d1 is not a unit) gives the transmitted ratios
directly, with no inversion or multiplication modulo ell^e_ell.
"""

import logging
import random
from dataclasses import dataclass
from math import gcd

from pydantic import BaseModel, ConfigDict

from trilog.dlog import digits_to_integer, ph_dlp
from trilog.errors import GenerationError, ParameterError
from trilog.field import CyclotomicElement, cyc_pow, sample_mu_generator
from trilog.metrics.counter import tally_zmod
from trilog.params import ParamSet
from trilog.strategy import Strategy, strategy_for
from trilog.tables import BaseSelection, DlogTable, build_table, choose_base, select_base

logger = logging.getLogger(__name__)

# (c0, d0, c1, d1)
Matrix = tuple[int, int, int, int]

_MATRIX_BUDGET = 1000


@dataclass(frozen=True)
class PairingTuple:
    r0: CyclotomicElement
    r1: CyclotomicElement
    r2: CyclotomicElement
    r3: CyclotomicElement
    r4: CyclotomicElement

    def as_hex(self) -> dict[str, str]:
        return {name: getattr(self, name).to_hex() for name in ("r0", "r1", "r2", "r3", "r4")}


class CompressedKey(BaseModel):
    model_config = ConfigDict(frozen=True)

    t0: int
    t1: int
    t2: int
    flag: int


def _is_unit(x: int, params: ParamSet) -> bool:
    return x % params.ell != 0


def check_invertible(matrix: Matrix, params: ParamSet):
    c0, d0, c1, d1 = matrix
    det = c0 * d1 - c1 * d0
    if gcd(det % params.order, params.ell) != 1:
        raise ParameterError(f"matrix {matrix} is singular modulo {params.ell}^{params.e_ell}")


def synth_pairing_tuple(params: ParamSet, matrix: Matrix, seed: int | None) -> PairingTuple:
    """Pairing values for a known matrix, built from a sampled r0."""
    check_invertible(matrix, params)
    c0, d0, c1, d1 = matrix
    g = sample_mu_generator(params.modulus, params.ell, params.e_ell, seed)
    return PairingTuple(
        r0=g,
        r1=cyc_pow(g, d0),
        r2=cyc_pow(g, d1),
        r3=cyc_pow(g, -c0),
        r4=cyc_pow(g, -c1),
    )


def random_invertible_matrix(params: ParamSet, rng: random.Random, d1_unit: bool | None = None) -> Matrix:
    """Uniform invertible matrix; d1_unit=True/False forces the flag branch."""
    n = params.order
    for _ in range(_MATRIX_BUDGET):
        matrix = (rng.randrange(n), rng.randrange(n), rng.randrange(n), rng.randrange(n))
        _, d0, _, d1 = matrix
        if d1_unit is True and not _is_unit(d1, params):
            continue
        if d1_unit is False and (_is_unit(d1, params) or not _is_unit(d0, params)):
            continue
        try:
            check_invertible(matrix, params)
        except ParameterError:
            continue
        return matrix
    raise GenerationError(f"no invertible matrix after {_MATRIX_BUDGET} draws")


def transmitted_tuple(matrix: Matrix, params: ParamSet) -> CompressedKey:
    """The transmitted ratios computed straight from the matrix: one inversion, three products."""
    c0, d0, c1, d1 = matrix
    n = params.order
    if _is_unit(d1, params):
        inv = pow(d1, -1, n)
        tally_zmod(inv=1, mul=3)
        return CompressedKey(t0=-inv * d0 % n, t1=-inv * c1 % n, t2=inv * c0 % n, flag=0)
    if _is_unit(d0, params):
        inv = pow(d0, -1, n)
        tally_zmod(inv=1, mul=3)
        return CompressedKey(t0=-inv * d1 % n, t1=inv * c1 % n, t2=-inv * c0 % n, flag=1)
    raise ParameterError(f"neither d0={d0} nor d1={d1} is a unit modulo {params.ell}^{params.e_ell}")


def prepare_base(tup: PairingTuple, params: ParamSet) -> tuple[BaseSelection, DlogTable]:
    sel = choose_base(tup.r1, tup.r2, params)
    return sel, build_table(sel, params)


def solve_transmitted(
    tup: PairingTuple,
    sel: BaseSelection,
    table: DlogTable,
    strategy: Strategy,
    params: ParamSet,
) -> CompressedKey:
    n = params.order

    def log(h: CyclotomicElement) -> int:
        return digits_to_integer(ph_dlp(h, strategy, table, sel, params), params)

    s3 = log(tup.r3)
    s4 = log(tup.r4)
    if sel.label == 1:
        s1 = log(tup.r1)
        return CompressedKey(t0=-s1 % n, t1=s4, t2=-s3 % n, flag=0)
    s2 = log(tup.r2)
    return CompressedKey(t0=-s2 % n, t1=-s4 % n, t2=s3, flag=1)


def compress_from_pairings(
    tup: PairingTuple,
    params: ParamSet,
    strategy: Strategy | None = None,
) -> CompressedKey:
    """Three logarithms to base r2 (or r1) straight into the transmitted tuple."""
    sel, table = prepare_base(tup, params)
    key = solve_transmitted(tup, sel, table, strategy or strategy_for(params), params)
    logger.debug("compressed with base label %d", sel.label)
    return key


def compress_four_dlogs(
    tup: PairingTuple,
    params: ParamSet,
    strategy: Strategy | None = None,
) -> CompressedKey:
    """Baseline: recover the whole matrix with four logarithms to base r0."""
    sel = select_base(tup.r0, params)
    table = build_table(sel, params)
    strategy = strategy or strategy_for(params)

    def log(h: CyclotomicElement) -> int:
        return digits_to_integer(ph_dlp(h, strategy, table, sel, params), params)

    n = params.order
    d0 = log(tup.r1)
    d1 = log(tup.r2)
    c0 = -log(tup.r3) % n
    c1 = -log(tup.r4) % n
    return transmitted_tuple((c0, d0, c1, d1), params)
