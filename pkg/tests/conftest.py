"""Shared test fixtures for trilog."""

import pytest

from trilog.field import CyclotomicElement, fp2_mul, sample_mu_generator
from trilog.params import MAX_W, ParamFamily, load_named


def all_subgroups(family: ParamFamily):
    """Every (ell, w) ParamSet the family supports."""
    out = []
    for ell, e_ell in ((2, family.e2), (3, family.e3)):
        for w in range(1, min(e_ell, MAX_W) + 1):
            out.append(family.subgroup(ell, w))
    return out


@pytest.fixture(scope="session")
def p431():
    return load_named("p431")


@pytest.fixture(scope="session")
def g27(p431):
    """Generator of mu_27 for p = 431."""
    return sample_mu_generator(p431.modulus, 3, 3, 7)


@pytest.fixture(scope="session")
def g16(p431):
    """Generator of mu_16 for p = 431."""
    return sample_mu_generator(p431.modulus, 2, 4, 7)


@pytest.fixture(scope="session")
def unit_circle(p431, g27, g16):
    """All 432 elements of the norm-one subgroup for p = 431."""
    gen = fp2_mul(g27, g16)
    elements = [CyclotomicElement.identity(p431.modulus.p)]
    for _ in range(431):
        elements.append(fp2_mul(elements[-1], gen))
    return elements
