"""Arithmetic in F_p, F_{p^2} = F_p[i]/(i^2+1) and the cyclotomic subgroup of order p+1.

Coordinates are kept in Montgomery form with R = 2^(64*limbs). Every
multiplication and squaring reports itself to the active OpCounter so the
cost model can be checked against actual runs.
"""

import logging
import os
import random
from functools import lru_cache

import sympy
from pydantic import BaseModel, ConfigDict, model_validator

from trilog.errors import (
    CompositeModulusError,
    ConsistencyError,
    GenerationError,
    NotInSubgroupError,
    ParameterError,
)
from trilog.metrics.counter import current_counter

logger = logging.getLogger(__name__)

_DEBUG = os.environ.get("TRILOG_DEBUG", "") not in ("", "0")

_SAMPLE_BUDGET = 256


# ---------------------------------------------------------------------------
# Modulus
# ---------------------------------------------------------------------------


class PrimeModulus(BaseModel):
    """A prime of the form 2^e2 * 3^e3 - 1."""

    model_config = ConfigDict(frozen=True)

    p: int
    e2: int
    e3: int
    bit_length: int

    @model_validator(mode="after")
    def _check_form(self):
        if self.p != 2**self.e2 * 3**self.e3 - 1:
            raise ValueError(f"p={self.p} is not 2^{self.e2}*3^{self.e3}-1")
        if self.bit_length != self.p.bit_length():
            raise ValueError(f"bit_length {self.bit_length} does not match p")
        if not sympy.isprime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        return self

    @classmethod
    def from_exponents(cls, e2: int, e3: int) -> "PrimeModulus":
        if e2 < 2 or e3 < 1:
            raise ParameterError(f"need e2 >= 2 and e3 >= 1, got e2={e2}, e3={e3}")
        p = 2**e2 * 3**e3 - 1
        if not sympy.isprime(p):
            small = [q for q in sympy.factorint(p, limit=10**6) if q < p]
            detail = f"divisible by {min(small)}" if small else "fails the primality test"
            raise CompositeModulusError(f"2^{e2}*3^{e3}-1 = {p} is composite ({detail})")
        return cls(p=p, e2=e2, e3=e3, bit_length=p.bit_length())

    @property
    def limbs(self) -> int:
        return -(-self.bit_length // 64)

    @property
    def fp_bytes(self) -> int:
        return 8 * self.limbs


# ---------------------------------------------------------------------------
# Montgomery domain
# ---------------------------------------------------------------------------


class MontgomeryDomain:
    """Montgomery reduction constants for one odd modulus."""

    __slots__ = ("p", "bits", "limbs", "shift", "mask", "n_prime", "r2", "one")

    def __init__(self, p: int):
        if p < 3 or not p & 1:
            raise ParameterError(f"Montgomery form needs an odd modulus, got {p}")
        self.p = p
        self.bits = p.bit_length()
        self.limbs = -(-self.bits // 64)
        self.shift = 64 * self.limbs
        r = 1 << self.shift
        self.mask = r - 1
        self.n_prime = (-pow(p, -1, r)) & self.mask
        self.r2 = (r * r) % p
        self.one = r % p

    def redc(self, t: int) -> int:
        m = ((t & self.mask) * self.n_prime) & self.mask
        u = (t + m * self.p) >> self.shift
        return u - self.p if u >= self.p else u

    def to_mont(self, x: int) -> int:
        return self.redc((x % self.p) * self.r2)

    def from_mont(self, x: int) -> int:
        return self.redc(x)

    @property
    def byte_length(self) -> int:
        return 8 * self.limbs


@lru_cache(maxsize=None)
def montgomery(p: int) -> MontgomeryDomain:
    return MontgomeryDomain(p)


def _same_domain(a: "Fp2Element", b: "Fp2Element") -> MontgomeryDomain:
    if a.dom is not b.dom and a.dom.p != b.dom.p:
        raise ParameterError(f"operands live in different fields (p={a.dom.p} vs p={b.dom.p})")
    return a.dom


# ---------------------------------------------------------------------------
# F_p
# ---------------------------------------------------------------------------


class FpElement:
    """Element of F_p; `value` is canonical, the Montgomery form is internal."""

    __slots__ = ("dom", "mont")

    def __init__(self, dom: MontgomeryDomain, mont: int):
        self.dom = dom
        self.mont = mont

    @classmethod
    def from_int(cls, p: int, value: int) -> "FpElement":
        dom = montgomery(p)
        return cls(dom, dom.to_mont(value))

    @property
    def value(self) -> int:
        return self.dom.from_mont(self.mont)

    def _check(self, other: "FpElement"):
        if self.dom.p != other.dom.p:
            raise ParameterError(f"operands live in different fields (p={self.dom.p} vs p={other.dom.p})")

    def __add__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement(self.dom, (self.mont + other.mont) % self.dom.p)

    def __sub__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement(self.dom, (self.mont - other.mont) % self.dom.p)

    def __neg__(self) -> "FpElement":
        return FpElement(self.dom, (-self.mont) % self.dom.p)

    def __mul__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        c = current_counter()
        if c is not None:
            c.m += 1
        return FpElement(self.dom, self.dom.redc(self.mont * other.mont))

    def square(self) -> "FpElement":
        c = current_counter()
        if c is not None:
            c.s += 1
        return FpElement(self.dom, self.dom.redc(self.mont * self.mont))

    def inverse(self) -> "FpElement":
        """Fermat inversion; off every measured path, so untallied."""
        v = self.value
        if v == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return FpElement.from_int(self.dom.p, pow(v, self.dom.p - 2, self.dom.p))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FpElement) and self.dom.p == other.dom.p and self.mont == other.mont

    def __hash__(self) -> int:
        return hash((self.dom.p, self.mont))

    def __repr__(self) -> str:
        return f"FpElement({self.value})"


# ---------------------------------------------------------------------------
# F_{p^2}
# ---------------------------------------------------------------------------


class Fp2Element:
    """u + v*i with both coordinates held in Montgomery form (attributes a, b)."""

    __slots__ = ("dom", "a", "b")

    def __init__(self, dom: MontgomeryDomain, a: int, b: int):
        self.dom = dom
        self.a = a
        self.b = b

    @classmethod
    def from_ints(cls, p: int, re: int, im: int = 0):
        dom = montgomery(p)
        return cls(dom, dom.to_mont(re), dom.to_mont(im))

    @classmethod
    def one(cls, p: int):
        dom = montgomery(p)
        return cls(dom, dom.one, 0)

    @property
    def re(self) -> FpElement:
        return FpElement(self.dom, self.a)

    @property
    def im(self) -> FpElement:
        return FpElement(self.dom, self.b)

    def coords(self) -> tuple[int, int]:
        return self.dom.from_mont(self.a), self.dom.from_mont(self.b)

    def is_one(self) -> bool:
        return self.a == self.dom.one and self.b == 0

    def norm(self) -> FpElement:
        d = self.dom
        return FpElement(d, (d.redc(self.a * self.a) + d.redc(self.b * self.b)) % d.p)

    def conjugate(self):
        return type(self)(self.dom, self.a, (-self.b) % self.dom.p)

    # -- serialization ------------------------------------------------------

    def to_bytes(self) -> bytes:
        re, im = self.coords()
        n = self.dom.byte_length
        return re.to_bytes(n, "little") + im.to_bytes(n, "little")

    @classmethod
    def from_bytes(cls, p: int, data: bytes):
        n = montgomery(p).byte_length
        if len(data) != 2 * n:
            raise ParameterError(f"expected {2 * n} bytes for an F_p^2 element, got {len(data)}")
        return cls._checked(p, int.from_bytes(data[:n], "little"), int.from_bytes(data[n:], "little"))

    def to_hex(self) -> str:
        n = self.dom.byte_length
        re, im = self.coords()
        return f"{re.to_bytes(n, 'little').hex()},{im.to_bytes(n, 'little').hex()}"

    @classmethod
    def from_hex(cls, p: int, text: str):
        n = montgomery(p).byte_length
        parts = text.strip().split(",")
        if len(parts) != 2:
            raise ParameterError(f"expected 're,im' hex pair, got {text!r}")
        coords = []
        for part in parts:
            try:
                raw = bytes.fromhex(part)
            except ValueError:
                raise ParameterError(f"not a hex string: {part!r}") from None
            if len(raw) != n:
                raise ParameterError(f"coordinate must be {n} bytes, got {len(raw)}")
            coords.append(int.from_bytes(raw, "little"))
        return cls._checked(p, *coords)

    @classmethod
    def _checked(cls, p: int, re: int, im: int):
        if re >= p or im >= p:
            raise ParameterError(f"coordinate not reduced modulo p={p}")
        return cls.from_ints(p, re, im)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Fp2Element)
            and self.dom.p == other.dom.p
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash((self.dom.p, self.a, self.b))

    def __repr__(self) -> str:
        re, im = self.coords()
        return f"{type(self).__name__}({re} + {im}*i)"


class CyclotomicElement(Fp2Element):
    """Element of norm one, i.e. of the order-(p+1) subgroup of F_{p^2}*."""

    __slots__ = ()

    @classmethod
    def identity(cls, p: int) -> "CyclotomicElement":
        return cls.one(p)

    @classmethod
    def _checked(cls, p: int, re: int, im: int) -> "CyclotomicElement":
        if re >= p or im >= p:
            raise ParameterError(f"coordinate not reduced modulo p={p}")
        el = cls.from_ints(p, re, im)
        if not is_unit_norm(el):
            raise NotInSubgroupError(f"{re} + {im}*i does not have norm 1 modulo {p}")
        return el

    def inverse(self) -> "CyclotomicElement":
        return cyc_conj_inv(self)


def is_unit_norm(a: Fp2Element) -> bool:
    return a.norm().mont == a.dom.one


def _require_unit_norm(a: Fp2Element):
    if not is_unit_norm(a):
        raise ConsistencyError(f"{a!r} is not in the cyclotomic subgroup")


def _mul_raw(d: MontgomeryDomain, a0: int, a1: int, b0: int, b1: int) -> tuple[int, int]:
    p = d.p
    t0 = d.redc(a0 * b0)
    t1 = d.redc(a1 * b1)
    t2 = d.redc(((a0 + a1) % p) * ((b0 + b1) % p))
    return (t0 - t1) % p, (t2 - t0 - t1) % p


def fp2_mul(x: Fp2Element, y: Fp2Element) -> Fp2Element:
    """Karatsuba product over the quadratic extension: three base multiplications."""
    d = _same_domain(x, y)
    c = current_counter()
    if c is not None:
        c.m += 3
    re, im = _mul_raw(d, x.a, x.b, y.a, y.b)
    cls = CyclotomicElement if isinstance(x, CyclotomicElement) and isinstance(y, CyclotomicElement) else Fp2Element
    return cls(d, re, im)


def fp2_sqr(x: Fp2Element) -> Fp2Element:
    """Generic squaring ((u+v)(u-v), 2uv)."""
    d = x.dom
    p = d.p
    c = current_counter()
    if c is not None:
        c.S += 1
    re = d.redc(((x.a + x.b) % p) * ((x.a - x.b) % p))
    im = (2 * d.redc(x.a * x.b)) % p
    return type(x)(d, re, im)


def cyc_conj_inv(x: CyclotomicElement) -> CyclotomicElement:
    """Inverse on the unit circle is the conjugate; free of multiplications."""
    if _DEBUG:
        _require_unit_norm(x)
    return CyclotomicElement(x.dom, x.a, (-x.b) % x.dom.p)


def cyc_sqr(x: CyclotomicElement) -> CyclotomicElement:
    """(2u^2 - 1) + ((u+v)^2 - 1)*i, valid because u^2 + v^2 = 1."""
    d = x.dom
    p = d.p
    c = current_counter()
    if c is not None:
        c.s += 2
    u2 = d.redc(x.a * x.a)
    t = (x.a + x.b) % p
    re = (2 * u2 - d.one) % p
    im = (d.redc(t * t) - d.one) % p
    if _DEBUG:
        _require_unit_norm(x)
        if im != (2 * d.redc(x.a * x.b)) % p:
            raise ConsistencyError("cyclotomic squaring disagrees with 2uv")
    return CyclotomicElement(d, re, im)


def cyc_cube(x: CyclotomicElement) -> CyclotomicElement:
    """u(4u^2 - 3) + v(4u^2 - 1)*i."""
    d = x.dom
    p = d.p
    c = current_counter()
    if c is not None:
        c.s += 1
        c.m += 2
    t = d.redc(x.a * x.a)
    re = d.redc(x.a * ((4 * t - 3 * d.one) % p))
    im = d.redc(x.b * ((4 * t - d.one) % p))
    if _DEBUG:
        _require_unit_norm(x)
    return CyclotomicElement(d, re, im)


def cyc_pow_ell(x: CyclotomicElement, ell: int, k: int) -> CyclotomicElement:
    """x^(ell^k) by k cyclotomic squarings or cubings."""
    if ell == 2:
        step = cyc_sqr
    elif ell == 3:
        step = cyc_cube
    else:
        raise ParameterError(f"unsupported ell: {ell}")
    if k < 0:
        raise ParameterError(f"negative power count: {k}")
    for _ in range(k):
        x = step(x)
    return x


def cyc_pow(x: CyclotomicElement, n: int) -> CyclotomicElement:
    """Generic square-and-multiply exponent, untallied.

    Reserved for oracles and test-vector generation.
    """
    d = x.dom
    a, b = x.a, x.b
    if n < 0:
        b = (-b) % d.p
        n = -n
    ra, rb = d.one, 0
    while n:
        if n & 1:
            ra, rb = _mul_raw(d, ra, rb, a, b)
        n >>= 1
        if n:
            a, b = _mul_raw(d, a, b, a, b)
    return CyclotomicElement(d, ra, rb)


def sample_mu_generator(modulus: PrimeModulus, ell: int, e_ell: int, rng_seed: int | None) -> CyclotomicElement:
    """Element of exact order ell^e_ell, deterministic for a fixed seed."""
    if ell not in (2, 3):
        raise ParameterError(f"unsupported ell: {ell}")
    p = modulus.p
    order = ell**e_ell
    if e_ell < 1 or (p + 1) % order:
        raise ParameterError(f"{ell}^{e_ell} does not divide p+1")
    cofactor = (p + 1) // order
    rng = random.Random(rng_seed)
    dom = montgomery(p)
    for attempt in range(_SAMPLE_BUDGET):
        z = Fp2Element.from_ints(p, rng.randrange(p), rng.randrange(p))
        if z.a == 0 and z.b == 0:
            continue
        # z^(p-1) = conj(z)^2 / N(z)
        ninv = z.norm().inverse().mont
        ca, cb = _mul_raw(dom, z.a, (-z.b) % p, z.a, (-z.b) % p)
        unit = CyclotomicElement(dom, dom.redc(ca * ninv), dom.redc(cb * ninv))
        g = cyc_pow(unit, cofactor)
        if not cyc_pow(g, order // ell).is_one():
            logger.debug("sampled generator of order %d^%d after %d draws", ell, e_ell, attempt + 1)
            return g
    raise GenerationError(f"no element of order {ell}^{e_ell} after {_SAMPLE_BUDGET} draws")
