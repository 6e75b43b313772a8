"""Exact symbolic engine: ring arithmetic, derivative closure, assembled forms."""
from fractions import Fraction

import mpmath as mp
import pytest

from latsum.lattice import SumIndex, make_lattice
from latsum.precision import PrecisionContext
from latsum.special import modulus_from_ratio
from latsum.symbolic import (FamilyAxis, GaussianRational, SymExpr, I,
                             differentiate_k, apply_derivative_operator,
                             v_base, v_even, v_derived, assemble_sum,
                             s2_closed_form, eval_sym)
from latsum.trig import sum_fast


# -- a tiny wrapper to write transcriptions naturally --------------------

class P:
    def __init__(self, e):
        self.e = e

    @staticmethod
    def _lift(x):
        if isinstance(x, P):
            return x.e
        return SymExpr.term(Fraction(x))

    def __add__(self, o):
        return P(self.e + P._lift(o))

    __radd__ = __add__

    def __sub__(self, o):
        return P(self.e - P._lift(o))

    def __rsub__(self, o):
        return P(P._lift(o) - self.e)

    def __mul__(self, o):
        return P(self.e * P._lift(o))

    __rmul__ = __mul__

    def __neg__(self):
        return P(self.e.scale(-1))

    def __pow__(self, n):
        out = SymExpr.term(1)
        for _ in range(n):
            out = out * self.e
        return P(out)


E = P(SymExpr.term(1, E=1))
K = P(SymExpr.term(1, K=1))
Kp = P(SymExpr.term(1, Kp=1))
pi = P(SymExpr.term(1, pi=1))
ipi2 = P(SymExpr.term(1, pi=-2))
ipi3 = P(SymExpr.term(1, pi=-3))
ipi4 = P(SymExpr.term(1, pi=-4))
k2 = P(SymExpr.term(1, k=2))


def subst_u(e: SymExpr) -> SymExpr:
    """Replace every power of the auxiliary (1-k^2) slot by its expansion."""
    u = SymExpr.term(1) - SymExpr.term(1, k=2)
    out = SymExpr.zero()
    for key, c in e.terms.items():
        a, b, kk, kp, ee, pp = key
        assert b >= 0
        term = SymExpr({(a, 0, kk, kp, ee, pp): c})
        for _ in range(b):
            term = term * u
        out = out + term
    return out


def same(a: SymExpr, b: P) -> bool:
    return subst_u(a) == subst_u(b.e)


# -- ring basics ---------------------------------------------------------

def test_gaussian_rational():
    a = GaussianRational(Fraction(1, 2), Fraction(-3))
    b = GaussianRational(2, Fraction(1, 3))
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(-8, 3))
    assert a * I == GaussianRational(3, Fraction(1, 2))
    assert I * I == GaussianRational(-1, 0)
    assert not GaussianRational(0, 0)


def test_expand_aux_exact_division():
    # (1 - k^2) K / (1 - k^2) == K
    e = SymExpr.term(1, K=1) - SymExpr.term(1, k=2, K=1)
    assert (e * SymExpr.term(1, u=-1)).expand_aux() == SymExpr.term(1, K=1)


def test_expand_aux_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (SymExpr.term(1, K=1) * SymExpr.term(1, u=-1)).expand_aux()


def test_differentiate_k_closure():
    # d/dk (K E) = K (E - K)/k + E (E - (1-k^2) K)/(k (1-k^2))
    got = differentiate_k(SymExpr.term(1, K=1, E=1))
    want = (SymExpr.term(1, k=-1, K=1, E=1) - SymExpr.term(1, k=-1, K=2)
            + SymExpr.term(1, k=-1, u=-1, E=2) - SymExpr.term(1, k=-1, K=1, E=1))
    assert got == want


def test_differentiate_k_rejects_complement():
    with pytest.raises(ValueError):
        differentiate_k(SymExpr.term(1, Kp=1))


def test_derivative_operator_polynomial():
    out = apply_derivative_operator(v_base(2, FamilyAxis.IX))
    kmin, _ = out.exponent_range(0)
    assert kmin >= 0 and not out.is_zero()


# -- structure of the V series ------------------------------------------

@pytest.mark.parametrize("fam", list(FamilyAxis))
@pytest.mark.parametrize("r", [2, 4, 6, 8, 10])
def test_v_even_degree_bounds(r, fam):
    lo, hi = v_even(r, fam).exponent_range(2)
    assert lo >= 1 and hi <= r


@pytest.mark.parametrize("fam", list(FamilyAxis))
@pytest.mark.parametrize("s,r", [(1, 2), (2, 2), (1, 4), (2, 4), (1, 6)])
def test_v_derived_degree_bounds(s, r, fam):
    lo, hi = v_derived(s, r, fam).exponent_range(2)
    if r == 2:
        assert lo >= s + 1 and hi <= 2 * (s + 1)
    else:
        assert lo >= s + r and hi <= 2 * s + r


@pytest.mark.parametrize("fam", list(FamilyAxis))
def test_odd_gap_assembles_to_zero(fam):
    assert assemble_sum(1, 4, fam).is_zero()
    assert assemble_sum(2, 7, fam).is_zero()


# -- exact equality with the independently transcribed closed forms ------

def test_s2_forms():
    assert same(s2_closed_form(FamilyAxis.IX),
                Fraction(4, 3) * Kp * (3 * E + (k2 - 2) * K))
    assert same(s2_closed_form(FamilyAxis.HALF),
                2 * Kp * (2 * E + Fraction(1, 3) * (4 * k2 - 5) * K))
    assert same(assemble_sum(0, 2, FamilyAxis.IX), P(s2_closed_form(FamilyAxis.IX)))
    assert same(assemble_sum(0, 2, FamilyAxis.HALF), P(s2_closed_form(FamilyAxis.HALF)))


def test_s42_rectangular():
    form = Fraction(4, 3) * ipi2 * Kp * (
        16 * E * (E - K) * (E + (k2 - 1) * K) * Kp ** 2
        - 4 * (3 * E ** 2 + 2 * E * (k2 - 2) * K - (k2 - 1) * K ** 2) * Kp * pi
        + (3 * E + (k2 - 2) * K) * pi ** 2)
    assert same(assemble_sum(2, 4, FamilyAxis.IX), form)


def test_s42_rhombic():
    form = Fraction(2, 3) * ipi2 * Kp * (
        16 * (2 * E - K) * (E ** 2 + 2 * E * (k2 - 1) * K - (k2 - 1) * K ** 2) * Kp ** 2
        - 8 * (3 * E ** 2 + E * (4 * k2 - 5) * K - 2 * (k2 - 1) * K ** 2) * Kp * pi
        + (6 * E + (4 * k2 - 5) * K) * pi ** 2)
    assert same(assemble_sum(2, 4, FamilyAxis.HALF), form)


def test_s53_rectangular():
    form = Fraction(4, 3) * ipi3 * Kp * (
        48 * E * (E - K) * (E + (k2 - 1) * K) * Kp ** 2 * pi
        - 16 * (3 * E ** 4 + 4 * E ** 3 * (k2 - 2) * K
                - 6 * E ** 2 * (k2 - 1) * K ** 2 - (k2 - 1) ** 2 * K ** 4) * Kp ** 3
        - 6 * (3 * E ** 2 + 2 * E * (k2 - 2) * K - (k2 - 1) * K ** 2) * Kp * pi ** 2
        + (3 * E + (k2 - 2) * K) * pi ** 3)
    assert same(assemble_sum(3, 5, FamilyAxis.IX), form)


def test_s53_rhombic():
    form = Fraction(2, 3) * ipi3 * Kp * (
        48 * (2 * E - K) * (E ** 2 + K * (2 * E - K) * (k2 - 1)) * Kp ** 2 * pi
        - 32 * (3 * E ** 4 + 2 * E ** 3 * (4 * k2 - 5) * K
                + (k2 - 1) * K ** 2 * (6 * E * K - 12 * E ** 2 - K ** 2)) * Kp ** 3
        - 12 * (3 * E ** 2 + E * (4 * k2 - 5) * K - 2 * (k2 - 1) * K ** 2) * Kp * pi ** 2
        + (6 * E + (4 * k2 - 5) * K) * pi ** 3)
    assert same(assemble_sum(3, 5, FamilyAxis.HALF), form)


def test_s64_rectangular():
    form = Fraction(4, 15) * ipi4 * Kp * (
        256 * (3 * E ** 5 + 5 * E ** 4 * (k2 - 2) * K - 10 * E ** 3 * (k2 - 1) * K ** 2
               - 5 * E * (k2 - 1) ** 2 * K ** 4
               - (k2 - 2) * (k2 - 1) ** 2 * K ** 5) * Kp ** 4
        - 320 * (3 * E ** 4 + 4 * E ** 3 * (k2 - 2) * K - 6 * E ** 2 * (k2 - 1) * K ** 2
                 - (k2 - 1) ** 2 * K ** 4) * Kp ** 3 * pi
        - 40 * (3 * E ** 2 + 2 * E * (k2 - 2) * K - (k2 - 1) * K ** 2) * Kp * pi ** 3
        + 5 * (3 * E + (k2 - 2) * K) * pi ** 4
        + 480 * E * (E - K) * (E + (k2 - 1) * K) * Kp ** 2 * pi ** 2)
    assert same(assemble_sum(4, 6, FamilyAxis.IX), form)


def test_s64_rhombic():
    form = Fraction(2, 15) * ipi4 * Kp * (
        256 * (6 * E ** 5 + 5 * E ** 4 * (4 * k2 - 5) * K - 40 * E ** 3 * (k2 - 1) * K ** 2
               + (k2 - 1) * (30 * E ** 2 * K ** 3 - 10 * E * K ** 4 + K ** 5)) * Kp ** 4
        - 640 * (3 * E ** 4 + 2 * E ** 3 * (4 * k2 - 5) * K
                 + (k2 - 1) * (6 * E * K ** 3 - 12 * E ** 2 * K ** 2 - K ** 4)) * Kp ** 3 * pi
        - 80 * (3 * E ** 2 + E * (4 * k2 - 5) * K - 2 * (k2 - 1) * K ** 2) * Kp * pi ** 3
        + 5 * (6 * E + (4 * k2 - 5) * K) * pi ** 4
        + 480 * (2 * E - K) * (E ** 2 + (k2 - 1) * (2 * E * K - K ** 2)) * Kp ** 2 * pi ** 2)
    assert same(assemble_sum(4, 6, FamilyAxis.HALF), form)


# -- numeric agreement with the trigonometric series ---------------------

@pytest.mark.parametrize("p,q", [(0, 2), (0, 4), (2, 4), (3, 5), (4, 6), (2, 6), (1, 5)])
@pytest.mark.parametrize("x", ["1.3", "2.0"])
def test_assembled_vs_fast(p, q, x):
    ctx = PrecisionContext(50)
    with ctx.working():
        xv = mp.mpf(x)
        for fam, tau in ((FamilyAxis.IX, mp.mpc(0, xv)),
                        (FamilyAxis.HALF, mp.mpc(mp.mpf("0.5"), xv / 2))):
            lat = make_lattice(tau)
            fast = sum_fast(SumIndex(p, q), lat, ctx).value
            mod = modulus_from_ratio(xv, ctx)
            sym = eval_sym(assemble_sum(p, q, fam), mod, ctx)
            assert abs(fast - sym) < mp.mpf("1e-45")
