"""Singular elliptic moduli k_r with K(k_r) in gamma-function closed form.

A modulus k_r is singular when K'/K = sqrt(r) for rational r.  At these
points K(k_r) reduces to products of gamma values and E(k_r) follows from
the elliptic alpha function, so the symbolic lattice-sum polynomials can be
evaluated without any quadrature: the only transcendental inputs are
gamma(1/4), was gamma(1/8)gamma(3/8), gamma(1/3) and pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath as mp

from .precision import DEFAULT_CTX, PrecisionContext
from .symbolic import FamilyAxis, SymExpr, assemble_sum, eval_sym_values


@dataclass(frozen=True)
class SingularModulusRecord:
    """Exact data at a singular modulus: x(k_r) = sqrt(r)."""

    r: Fraction
    k_form: str
    big_k_form: str
    _k: Callable[[], mp.mpf]
    _big_k: Callable[[], mp.mpf]
    _alpha: Callable[[], mp.mpf]

    def modulus(self, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
        with ctx.working():
            return self._k()

    def big_k(self, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
        with ctx.working():
            return self._big_k()

    def big_kp(self, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
        # K'(k_r) = sqrt(r) K(k_r), by the definition of a singular modulus
        with ctx.working():
            root = mp.sqrt(mp.mpf(self.r.numerator) / self.r.denominator)
            return root * self._big_k()

    def alpha(self, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
        with ctx.working():
            return self._alpha()

    def big_e(self, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
        """E(k_r) = (1 - alpha(r)/sqrt(r)) K + pi/(4 sqrt(r) K)."""
        with ctx.working():
            root = mp.sqrt(mp.mpf(self.r.numerator) / self.r.denominator)
            big_k = self._big_k()
            return (1 - self._alpha() / root) * big_k + mp.pi / (4 * root * big_k)


def _rec(r, k_form, big_k_form, k_fn, big_k_fn, alpha_fn):
    return SingularModulusRecord(Fraction(r), k_form, big_k_form,
                                 k_fn, big_k_fn, alpha_fn)


def _k1():
    return 1 / mp.sqrt(2)


def _bk1():
    return mp.gamma(mp.mpf(1) / 4) ** 2 / (4 * mp.sqrt(mp.pi))


def _k2():
    return mp.sqrt(2) - 1


def _bk2():
    return (mp.sqrt(mp.sqrt(2) + 1) * mp.gamma(mp.mpf(1) / 8)
            * mp.gamma(mp.mpf(3) / 8) / (2 ** (mp.mpf(13) / 4) * mp.sqrt(mp.pi)))


def _k3():
    return mp.sqrt(2) * (mp.sqrt(3) - 1) / 4


def _bk3():
    return 3 ** mp.mpf("0.25") * mp.gamma(mp.mpf(1) / 3) ** 3 / (2 ** (mp.mpf(7) / 3) * mp.pi)


def _k4():
    return 3 - 2 * mp.sqrt(2)


def _bk4():
    return (mp.sqrt(2) + 1) * mp.gamma(mp.mpf(1) / 4) ** 2 / (2 ** mp.mpf("3.5") * mp.sqrt(mp.pi))


def _alpha_inverse(r: int):
    # alpha(1/r) = (sqrt(r) - alpha(r))/r
    a = _ALPHA[r]
    return lambda: (mp.sqrt(r) - a()) / r


_ALPHA = {
    1: lambda: mp.mpf(1) / 2,
    2: lambda: mp.sqrt(2) - 1,
    3: lambda: (mp.sqrt(3) - 1) / 2,
    4: lambda: 2 * (mp.sqrt(2) - 1) ** 2,
}

_RECORDS: dict[Fraction, SingularModulusRecord] = {}
for rec in (
    _rec(1, "1/sqrt(2)", "Gamma(1/4)^2/(4 sqrt(pi))", _k1, _bk1, _ALPHA[1]),
    _rec(2, "sqrt(2)-1", "sqrt(sqrt(2)+1) Gamma(1/8) Gamma(3/8)/(2^(13/4) sqrt(pi))",
         _k2, _bk2, _ALPHA[2]),
    _rec(3, "sqrt(2)(sqrt(3)-1)/4", "3^(1/4) Gamma(1/3)^3/(2^(7/3) pi)",
         _k3, _bk3, _ALPHA[3]),
    _rec(4, "3-2 sqrt(2)", "(sqrt(2)+1) Gamma(1/4)^2/(2^(7/2) sqrt(pi))",
         _k4, _bk4, _ALPHA[4]),
    # complementary moduli: k_{1/r} = k_r', K(k_{1/r}) = sqrt(r) K(k_r)
    _rec(Fraction(1, 2), "sqrt(2 sqrt(2)-2)",
         "sqrt(2) K(k_2)", lambda: mp.sqrt(2 * mp.sqrt(2) - 2),
         lambda: mp.sqrt(2) * _bk2(), _alpha_inverse(2)),
    _rec(Fraction(1, 3), "sqrt(2)(sqrt(3)+1)/4",
         "sqrt(3) K(k_3)", lambda: mp.sqrt(2) * (mp.sqrt(3) + 1) / 4,
         lambda: mp.sqrt(3) * _bk3(), _alpha_inverse(3)),
    _rec(Fraction(1, 4), "2^(1/4)(2 sqrt(2)-2)",
         "2 K(k_4)", lambda: 2 ** mp.mpf("0.25") * (2 * mp.sqrt(2) - 2),
         lambda: 2 * _bk4(), _alpha_inverse(4)),
):
    _RECORDS[rec.r] = rec


def singular_modulus(r) -> SingularModulusRecord:
    """Record for x = sqrt(r); r in {1, 2, 3, 4, 1/2, 1/3, 1/4}."""
    key = Fraction(r)
    if key not in _RECORDS:
        raise KeyError(f"no singular modulus tabulated for r = {r}")
    return _RECORDS[key]


def exact_sum(p: int, q: int, fam: FamilyAxis, r,
              ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """S_q^(p) at tau = i sqrt(r) (IX) or (1 + i sqrt(r))/2 (HALF), evaluated
    from the exact polynomial with gamma-closed elliptic integrals."""
    rec = singular_modulus(r)
    expr = assemble_sum(p, q, fam)
    with ctx.working():
        val = eval_sym_values(expr, rec.modulus(ctx), rec.big_k(ctx),
                              rec.big_kp(ctx), rec.big_e(ctx), ctx)
        return val.real if abs(val.imag) < ctx.eps else val
