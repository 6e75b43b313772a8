import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latsum.precision import PrecisionContext
from latsum.special import (EllipticModulus, dx_dk, ellip_e, ellip_k, gamma,
                            gamma_oracle, legendre_residual, modulus_from_ratio,
                            modulus_ratio)


def test_precision_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(10)
    with pytest.raises(ValueError):
        PrecisionContext(50, guard_digits=2)
    ctx = PrecisionContext(50)
    assert ctx.dps == 60


@pytest.mark.parametrize("x", ["0.25", "0.125", "0.375", "1/3"])
def test_gamma_against_quadrature_oracle(x, ctx50):
    with ctx50.working():
        xv = mp.mpf(1) / 3 if x == "1/3" else mp.mpf(x)
        a = gamma(xv, ctx50)
        b = gamma_oracle(xv, ctx50)
        assert abs(a - b) / a < mp.mpf("1e-45")


def test_modulus_validation():
    with pytest.raises(ValueError):
        EllipticModulus.from_k(mp.mpf(0))
    with pytest.raises(ValueError):
        EllipticModulus.from_k(mp.mpf("1.0"))
    with pytest.raises(ValueError):
        EllipticModulus.from_k(mp.mpf("-0.5"))


def test_legendre_residual_grid(ctx50):
    # E K' + E' K - K K' = pi/2 across the whole k range
    with ctx50.working():
        for i in range(1, 51):
            k = EllipticModulus.from_k(mp.mpf(i) / 51)
            assert abs(legendre_residual(k, ctx50)) < mp.mpf("1e-45")


def test_ellip_k_special_value(ctx50):
    # K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt(pi))
    with ctx50.working():
        k = EllipticModulus.from_k(1 / mp.sqrt(2))
        ref = gamma(mp.mpf(1) / 4, ctx50) ** 2 / (4 * mp.sqrt(mp.pi))
        assert abs(ellip_k(k, ctx50) - ref) < mp.mpf("1e-55")


def test_dx_dk_finite_difference(ctx50):
    hi = PrecisionContext(90)
    with hi.working():
        h = mp.mpf("1e-30")
        for kv in (mp.mpf("0.3"), mp.mpf("0.72")):
            d = dx_dk(EllipticModulus.from_k(kv), hi)
            fd = (modulus_ratio(EllipticModulus.from_k(kv + h), hi)
                  - modulus_ratio(EllipticModulus.from_k(kv - h), hi)) / (2 * h)
            assert abs(d - fd) / abs(d) < mp.mpf("1e-20")


def test_modulus_from_ratio_roundtrip(ctx50):
    with ctx50.working():
        for x in (mp.mpf(1), mp.mpf("0.4"), mp.sqrt(3), mp.mpf("2.5")):
            k = modulus_from_ratio(x, ctx50)
            assert abs(modulus_ratio(k, ctx50) - x) < mp.mpf("1e-45")
        # x = 1 is self-complementary
        assert abs(modulus_from_ratio(mp.mpf(1), ctx50).k - 1 / mp.sqrt(2)) < mp.mpf("1e-45")


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.05, max_value=0.95))
def test_legendre_property(kf):
    ctx = PrecisionContext(30)
    with ctx.working():
        k = EllipticModulus.from_k(mp.mpf(kf))
        assert abs(legendre_residual(k, ctx)) < mp.mpf("1e-28")


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.05, max_value=0.9))
def test_k_monotone(kf):
    # K increases with k while E decreases
    ctx = PrecisionContext(30)
    with ctx.working():
        a = EllipticModulus.from_k(mp.mpf(kf))
        b = EllipticModulus.from_k(mp.mpf(kf) + mp.mpf("0.05"))
        assert ellip_k(b, ctx) > ellip_k(a, ctx)
        assert ellip_e(b, ctx) < ellip_e(a, ctx)
