"""Named and toy parameter sets: the prime and the subgroup a run targets."""

import re
from functools import lru_cache

from pydantic import BaseModel, ConfigDict

from trilog.errors import ParameterError, UnknownParamsError
from trilog.field import PrimeModulus

# (e2, e3) of the SIKE round-3 primes.
SIKE_SETS: dict[str, tuple[int, int]] = {
    "SIKEp434": (216, 137),
    "SIKEp503": (250, 159),
    "SIKEp610": (305, 192),
    "SIKEp751": (372, 239),
}

TOY_SETS: dict[str, tuple[int, int]] = {
    "p431": (4, 3),
    "p11": (2, 1),
}

DEFAULT_W = {2: 4, 3: 3}
MAX_W = 6

_TOY_SPEC = re.compile(r"^\s*2\^(\d+)\s*\*\s*3\^(\d+)\s*-\s*1\s*$")


class ParamSet(BaseModel):
    """One subgroup mu_{ell^e_ell} of a parameter family, with its window w."""

    model_config = ConfigDict(frozen=True)

    name: str
    modulus: PrimeModulus
    ell: int
    e_ell: int
    w: int

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def L(self) -> int:
        return self.ell**self.w

    @property
    def m(self) -> int:
        return self.e_ell % self.w

    @property
    def order(self) -> int:
        return self.ell**self.e_ell

    @property
    def n_rows(self) -> int:
        """Rows of the lookup table, also the number of strategy leaves."""
        return self.e_ell // self.w

    @property
    def n_digits(self) -> int:
        return -(-self.e_ell // self.w)

    @property
    def n_cols(self) -> int:
        return -(-(self.L - 1) // 2)

    def with_w(self, w: int) -> "ParamSet":
        return _subgroup(self.name, self.modulus, self.ell, w)

    def describe(self) -> dict:
        return {"params": self.name, "ell": self.ell, "e_ell": self.e_ell, "w": self.w, "m": self.m}


class ParamFamily(BaseModel):
    """A named prime 2^e2 * 3^e3 - 1 before a subgroup is picked."""

    model_config = ConfigDict(frozen=True)

    name: str
    modulus: PrimeModulus

    @property
    def e2(self) -> int:
        return self.modulus.e2

    @property
    def e3(self) -> int:
        return self.modulus.e3

    def subgroup(self, ell: int, w: int | None = None) -> ParamSet:
        if ell not in (2, 3):
            raise ParameterError(f"unsupported ell: {ell}")
        if w is None:
            e_ell = self.e2 if ell == 2 else self.e3
            w = min(DEFAULT_W[ell], e_ell)
        return _subgroup(self.name, self.modulus, ell, w)


def _subgroup(name: str, modulus: PrimeModulus, ell: int, w: int) -> ParamSet:
    if ell not in (2, 3):
        raise ParameterError(f"unsupported ell: {ell}")
    e_ell = modulus.e2 if ell == 2 else modulus.e3
    if not 1 <= w <= min(e_ell, MAX_W):
        raise ParameterError(f"window w={w} outside 1..{min(e_ell, MAX_W)} for ell={ell}")
    return ParamSet(name=name, modulus=modulus, ell=ell, e_ell=e_ell, w=w)


@lru_cache(maxsize=None)
def load_named(name: str) -> ParamFamily:
    if name in SIKE_SETS:
        e2, e3 = SIKE_SETS[name]
    elif name in TOY_SETS:
        e2, e3 = TOY_SETS[name]
    else:
        raise UnknownParamsError(f"Unknown parameter set: {name}")
    return ParamFamily(name=name, modulus=PrimeModulus.from_exponents(e2, e3))


def make_toy(e2: int, e3: int) -> ParamFamily:
    return ParamFamily(name=f"2^{e2}*3^{e3}-1", modulus=PrimeModulus.from_exponents(e2, e3))


def resolve_params(text: str) -> ParamFamily:
    """A named set, or a toy written as '2^a*3^b-1'."""
    match = _TOY_SPEC.match(text)
    if match:
        return make_toy(int(match.group(1)), int(match.group(2)))
    return load_named(text.strip())
