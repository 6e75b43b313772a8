"""Gamma-closed elliptic data at singular moduli and the exact sums built on it."""
from fractions import Fraction

import mpmath as mp
import pytest

from latsum.precision import PrecisionContext
from latsum.special import EllipticModulus, ellip_k, ellip_e
from latsum.singular import singular_modulus, exact_sum
from latsum.symbolic import FamilyAxis

_RS = [1, 2, 3, 4, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]


@pytest.mark.parametrize("r", _RS, ids=str)
def test_modulus_in_range(r, ctx50):
    rec = singular_modulus(r)
    k = rec.modulus(ctx50)
    assert 0 < k < 1


@pytest.mark.parametrize("r", _RS, ids=str)
def test_big_k_vs_agm(r, ctx50):
    """The gamma-function closed form for K(k_r) against the AGM evaluation."""
    rec = singular_modulus(r)
    with ctx50.working():
        agm = ellip_k(EllipticModulus.from_k(rec.modulus(ctx50), ctx50), ctx50)
        assert abs(rec.big_k(ctx50) - agm) < mp.mpf("1e-45")


@pytest.mark.parametrize("r", _RS, ids=str)
def test_big_kp_ratio(r, ctx50):
    rec = singular_modulus(r)
    with ctx50.working():
        kp = ellip_k(EllipticModulus.from_k(rec.modulus(ctx50), ctx50).complementary(), ctx50)
        assert abs(rec.big_kp(ctx50) - kp) < mp.mpf("1e-45")


@pytest.mark.parametrize("r", _RS, ids=str)
def test_big_e_vs_agm(r, ctx50):
    """E(k_r) from the elliptic alpha function against the AGM evaluation."""
    rec = singular_modulus(r)
    with ctx50.working():
        agm = ellip_e(EllipticModulus.from_k(rec.modulus(ctx50), ctx50), ctx50)
        assert abs(rec.big_e(ctx50) - agm) < mp.mpf("1e-45")


def test_unknown_r_rejected():
    with pytest.raises(KeyError):
        singular_modulus(5)


def test_legendre_at_singular_moduli(ctx50):
    """E K' + E' K - K K' = pi/2 with E' from the reciprocal record."""
    with ctx50.working():
        for r in (2, 3, 4):
            rec = singular_modulus(r)
            rec_inv = singular_modulus(Fraction(1, r))
            e, k, kp = rec.big_e(ctx50), rec.big_k(ctx50), rec.big_kp(ctx50)
            # k_{1/r} is the complementary modulus of k_r
            assert abs(rec_inv.modulus(ctx50) ** 2 + rec.modulus(ctx50) ** 2 - 1) < mp.mpf("1e-45")
            ep = rec_inv.big_e(ctx50)
            assert abs(e * kp + ep * k - k * kp - mp.pi / 2) < mp.mpf("1e-45")


def test_exact_spot_values(ctx50):
    with ctx50.working():
        # S_4^(2) at tau = i
        assert abs(exact_sum(2, 4, FamilyAxis.IX, 1, ctx50) - mp.pi / 3) < mp.mpf("1e-45")
        # S_2 at the hexagonal-family point collapses to pi
        assert abs(exact_sum(0, 2, FamilyAxis.HALF, 3, ctx50) - mp.pi) < mp.mpf("1e-45")
        # S_3^(1) at tau = i sqrt(2)
        g = mp.gamma(mp.mpf(1) / 8) * mp.gamma(mp.mpf(3) / 8)
        want = mp.pi / 2 + g ** 4 / (1024 * mp.pi ** 3)
        assert abs(exact_sum(1, 3, FamilyAxis.IX, 2, ctx50) - want) < mp.mpf("1e-45")
        # S_2 on the square lattice is pi as well
        assert abs(exact_sum(0, 2, FamilyAxis.IX, 1, ctx50) - mp.pi) < mp.mpf("1e-45")
