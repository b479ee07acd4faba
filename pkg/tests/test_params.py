"""Tests for parameter sets."""

import pytest

from trilog.errors import CompositeModulusError, ParameterError, UnknownParamsError
from trilog.params import SIKE_SETS, load_named, make_toy, resolve_params


class TestLoadNamed:
    @pytest.mark.parametrize("name,e2,e3,bits", [
        ("SIKEp434", 216, 137, 434),
        ("SIKEp503", 250, 159, 503),
        ("SIKEp610", 305, 192, 610),
        ("SIKEp751", 372, 239, 751),
    ])
    def test_sike_sets(self, name, e2, e3, bits):
        family = load_named(name)
        assert (family.e2, family.e3) == (e2, e3)
        assert family.modulus.bit_length == bits
        assert family.modulus.p % 4 == 3

    def test_toy(self):
        family = load_named("p431")
        assert (family.modulus.p, family.e2, family.e3) == (431, 4, 3)

    def test_unknown(self):
        with pytest.raises(UnknownParamsError, match="SIKEp999"):
            load_named("SIKEp999")

    def test_unknown_is_a_key_error(self):
        with pytest.raises(KeyError):
            load_named("nope")

    @pytest.mark.parametrize("name", list(SIKE_SETS) + ["p431", "p11"])
    def test_subgroup_orders_divide(self, name):
        family = load_named(name)
        for ell in (2, 3):
            ps = family.subgroup(ell)
            assert (ps.p + 1) % ps.order == 0


class TestMakeToy:
    def test_431(self):
        assert make_toy(4, 3).modulus.p == 431

    def test_11(self):
        assert make_toy(2, 1).modulus.p == 11

    def test_composite_names_factor(self):
        with pytest.raises(CompositeModulusError, match="287.*7"):
            make_toy(5, 2)

    def test_composite_is_parameter_error(self):
        with pytest.raises(ParameterError):
            make_toy(5, 2)

    def test_exponent_bounds(self):
        with pytest.raises(ParameterError, match="e2 >= 2"):
            make_toy(1, 3)


class TestResolve:
    def test_spec_string(self):
        family = resolve_params("2^4*3^3-1")
        assert family.modulus.p == 431
        assert family.name == "2^4*3^3-1"

    def test_spec_string_with_spaces(self):
        assert resolve_params(" 2^2 * 3^1 - 1 ").modulus.p == 11

    def test_named(self):
        assert resolve_params("SIKEp434").e2 == 216


class TestParamSet:
    def test_default_windows(self):
        family = load_named("SIKEp434")
        assert family.subgroup(2).w == 4
        assert family.subgroup(3).w == 3

    def test_default_window_capped(self):
        family = load_named("p11")
        assert family.subgroup(3).w == 1
        assert family.subgroup(2).w == 2

    def test_derived_quantities(self):
        ps = load_named("SIKEp434").subgroup(3, 3)
        assert (ps.e_ell, ps.L, ps.m) == (137, 27, 2)
        assert (ps.n_rows, ps.n_digits, ps.n_cols) == (45, 46, 13)

    def test_ell2_columns(self):
        ps = load_named("SIKEp434").subgroup(2, 4)
        assert (ps.L, ps.m, ps.n_rows, ps.n_cols) == (16, 0, 54, 8)

    def test_window_out_of_range(self):
        family = load_named("p431")
        with pytest.raises(ParameterError, match="window"):
            family.subgroup(3, 4)
        with pytest.raises(ParameterError, match="window"):
            load_named("SIKEp434").subgroup(2, 7)

    def test_unsupported_ell(self):
        with pytest.raises(ParameterError, match="unsupported ell"):
            load_named("p431").subgroup(5)

    def test_with_w(self):
        ps = load_named("p431").subgroup(2, 1)
        assert ps.with_w(3).m == 1
