"""Operation tallies in base-field multiplications and squarings."""

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

OP_FIELDS = ("m", "s", "M", "S", "zmod_inv", "zmod_mul", "skipped_mul")

# Weights in tenths of one F_p multiplication.
WEIGHTS_TENTHS: dict[str, int] = {"m": 10, "s": 8, "M": 30, "S": 20}
SKIPPED_MUL_TENTHS = WEIGHTS_TENTHS["M"]


class OpCounts(BaseModel):
    """Immutable snapshot of an OpCounter."""

    model_config = ConfigDict(frozen=True)

    m: int = 0
    s: int = 0
    M: int = 0
    S: int = 0
    zmod_inv: int = 0
    zmod_mul: int = 0
    skipped_mul: int = 0

    def merge(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(**{f: getattr(self, f) + getattr(other, f) for f in OP_FIELDS})

    def minus(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(**{f: getattr(self, f) - getattr(other, f) for f in OP_FIELDS})

    def measured_cost(self) -> Fraction:
        """m-equivalent cost of the operations actually executed."""
        tenths = sum(getattr(self, op) * w for op, w in WEIGHTS_TENTHS.items())
        return Fraction(tenths, 10)

    def model_cost(self) -> Fraction:
        """Measured cost plus one F_{p^2} multiplication per skipped cancellation."""
        return self.measured_cost() + Fraction(self.skipped_mul * SKIPPED_MUL_TENTHS, 10)


class OpCounter:
    """Mutable tally bound to an execution context by `counting()`."""

    __slots__ = OP_FIELDS

    def __init__(self):
        self.reset()

    def reset(self):
        for f in OP_FIELDS:
            setattr(self, f, 0)

    def snapshot(self) -> OpCounts:
        return OpCounts(**{f: getattr(self, f) for f in OP_FIELDS})

    def __repr__(self) -> str:
        inner = ", ".join(f"{f}={getattr(self, f)}" for f in OP_FIELDS if getattr(self, f))
        return f"OpCounter({inner})"


_active: ContextVar[OpCounter | None] = ContextVar("trilog_op_counter", default=None)


def current_counter() -> OpCounter | None:
    return _active.get()


@contextmanager
def counting(counter: OpCounter | None = None) -> Iterator[OpCounter]:
    """Bind `counter` (or a fresh one) as the active tally for this context."""
    counter = counter if counter is not None else OpCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


def tally_zmod(inv: int = 0, mul: int = 0):
    c = _active.get()
    if c is not None:
        c.zmod_inv += inv
        c.zmod_mul += mul


def tally_skipped(n: int):
    c = _active.get()
    if c is not None:
        c.skipped_mul += n


def snapshot_and_reset(counter: OpCounter | None = None) -> OpCounts:
    """Return the current tallies and zero the counter.

    With no argument the context's active counter is used; outside any
    `counting()` block the snapshot is all zeros.
    """
    counter = counter if counter is not None else _active.get()
    if counter is None:
        return OpCounts()
    snap = counter.snapshot()
    counter.reset()
    return snap
