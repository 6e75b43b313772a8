import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latsum.lattice import (Family, SumIndex, hexagonal, make_lattice,
                            rectangular, rhombic, square, symmetry_vanishes)


def test_classification():
    assert square().family is Family.RECTANGULAR
    assert square().symmetry_order == 4
    assert hexagonal().family is Family.RHOMBIC
    assert hexagonal().symmetry_order == 6
    assert rectangular(mp.mpf("1.7")).symmetry_order == 2
    assert rhombic(mp.mpf("1.2")).symmetry_order == 2
    gen = make_lattice(mp.mpc("0.3", "1.1"))
    assert gen.family is Family.GENERAL
    assert gen.symmetry_order == 2


def test_invalid_tau():
    with pytest.raises(ValueError):
        make_lattice(mp.mpc(1, -2))
    with pytest.raises(ValueError):
        make_lattice(mp.mpf(3))


def test_unit_cell_area():
    with mp.workdps(60):
        for lat in (square(), hexagonal(), rectangular(mp.mpf("2.4"))):
            assert abs(lat.omega1 ** 2 * lat.im_tau - 1) < mp.mpf("1e-40")


def test_sum_index():
    idx = SumIndex(2, 6)
    assert idx.gap == 4
    assert SumIndex(3, 3).gap == 0
    with pytest.raises(ValueError):
        SumIndex(-1, 3)


def test_symmetry_vanishes_rules():
    # square kills everything with p + q not divisible by 4
    assert symmetry_vanishes(SumIndex(1, 5), square())       # 6 % 4 = 2
    assert symmetry_vanishes(SumIndex(0, 6), square())
    assert not symmetry_vanishes(SumIndex(0, 8), square())   # 8 % 4 = 0
    assert symmetry_vanishes(SumIndex(1, 4), hexagonal())    # 5 % 6 != 0
    assert not symmetry_vanishes(SumIndex(1, 5), hexagonal())
    assert not symmetry_vanishes(SumIndex(4, 8), hexagonal())


def test_rhombic_x_parameter():
    lat = rhombic(mp.mpf("1.5"))
    assert abs(lat.x - mp.mpf("1.5")) < mp.mpf("1e-45")
    assert abs(lat.tau - mp.mpc("0.5", "0.75")) < mp.mpf("1e-45")


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=8), st.integers(min_value=3, max_value=9))
def test_odd_parity_always_vanishes(p, gap):
    # central symmetry alone kills every odd p + q
    idx = SumIndex(p, p + gap)
    if (idx.p + idx.q) % 2 == 1:
        assert symmetry_vanishes(idx, rectangular(mp.mpf("1.3")))
