"""Algebraic fast paths for the classic sums and the S^(1) family.

Classic sums S_{2l} follow from S_4 and S_6 through the Weierstrass
coefficient recurrence; S_4 and S_6 themselves are seeded from the exact
elliptic-integral expressions for the two tau families, falling back to the
brute-force oracle for general tau.  The sums S_{2m+3}^(1) then follow from
the classic sums by the Natanzon-Filshtinsky-derived relation.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .lattice import Family, LatticeSpec, Method, SumIndex, SumValue, symmetry_vanishes
from .oracle import sum_absolute
from .precision import DEFAULT_CTX, PrecisionContext
from .special import ellip_k, modulus_from_ratio
from .trig import s2_rayleigh


def _v4_v6(lat: LatticeSpec, ctx: PrecisionContext):
    """Exact V_4^(0), V_6^(0) in elliptic integrals for the two families."""
    k = modulus_from_ratio(lat.x, ctx)
    bigk = ellip_k(k, ctx)
    k2 = k.k * k.k
    if lat.family is Family.RECTANGULAR:
        v4 = mp.mpf(16) / 45 * (k2 * k2 - k2 + 1) * bigk**4
        v6 = mp.mpf(64) / 945 * (k2 - 2) * (2 * k2 - 1) * (k2 + 1) * bigk**6
    else:
        v4 = mp.mpf(16) / 45 * (16 * k2 * k2 - 16 * k2 + 1) * bigk**4
        v6 = mp.mpf(128) / 945 * (2 * k2 - 1) * (32 * k2 * k2 - 32 * k2 - 1) * bigk**6
    return v4, v6


def classic_base(lat: LatticeSpec, ctx: PrecisionContext = DEFAULT_CTX,
                 fallback_radius: int = 600):
    """(S_4, S_6) at ctx precision.

    Rotational-symmetry zeros (S_4 on the hexagonal lattice, S_6 on the
    square) are returned as exact zeros rather than the numerically tiny
    residue of the elliptic formulas.
    """
    with ctx.working():
        if lat.family in (Family.RECTANGULAR, Family.RHOMBIC):
            v4, v6 = _v4_v6(lat, ctx)
            s4 = lat.im_tau**2 * v4
            s6 = lat.im_tau**3 * v6
        else:
            s4 = sum_absolute(SumIndex(0, 4), lat, fallback_radius, ctx).value.real
            s6 = sum_absolute(SumIndex(0, 6), lat, fallback_radius, ctx).value.real
        if symmetry_vanishes(SumIndex(0, 4), lat):
            s4 = mp.mpf(0)
        if symmetry_vanishes(SumIndex(0, 6), lat):
            s6 = mp.mpf(0)
        return s4, s6


def classic_sums(lat: LatticeSpec, L: int, ctx: PrecisionContext = DEFAULT_CTX) -> dict[int, mp.mpf]:
    """Classic sums {2l: S_2l} for l = 2..L by the Weierstrass recurrence.

    (2l-1)(2l+1)(l-3) S_2l = 3 sum_{j=2}^{l-2} (2j-1)(2l-2j-1) S_2j S_{2l-2j};
    the l = 3 left side has coefficient zero, so S_6 always comes from the seed.
    """
    if L < 2:
        raise ValueError(f"L must be >= 2, got {L}")
    with ctx.working():
        s4, s6 = classic_base(lat, ctx)
        out = {4: s4}
        if L >= 3:
            out[6] = s6
        for l in range(4, L + 1):
            acc = mp.mpf(0)
            for j in range(2, l - 1):
                acc += (2 * j - 1) * (2 * (l - j) - 1) * out[2 * j] * out[2 * (l - j)]
            out[2 * l] = 3 * acc / ((2 * l - 1) * (2 * l + 1) * (l - 3))
        return out


def s1_sums(lat: LatticeSpec, M: int, ctx: PrecisionContext = DEFAULT_CTX) -> dict[int, mp.mpf]:
    """{2m+3: S_{2m+3}^(1)} for m = 1..M from the classic sums.

    2 pi S_{2m+3}^(1) = (2m+5) S_{2m+4} - 2 (S_2 - pi) S_{2m+2}
                        - sum_{l=1}^{m-1} ((2l+1)/(m+1)) S_{2l+2} S_{2(m-l)+2}.

    The coefficient 2 of the (S_2 - pi) term is fixed numerically against
    the double-sum oracle on rectangular and oblique lattices; it is
    independent of m.

    For the square and hexagonal lattices S_2 = pi exactly and the middle
    term is dropped rather than evaluated, so the symmetry zeros come out
    exact (e.g. the square S_5^(1) = 7 S_6/(2 pi) = 0).
    """
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    with ctx.working():
        cs = classic_sums(lat, M + 2, ctx)
        cs = dict(cs)
        cs[2] = mp.pi if lat.symmetry_order in (4, 6) else s2_rayleigh(lat, ctx).value.real
        out = {}
        for m in range(1, M + 1):
            acc = (2 * m + 5) * cs[2 * m + 4]
            if lat.symmetry_order not in (4, 6):
                acc -= 2 * (cs[2] - mp.pi) * cs[2 * m + 2]
            for l in range(1, m):
                acc -= mp.mpf(2 * l + 1) / (m + 1) * cs[2 * l + 2] * cs[2 * (m - l) + 2]
            out[2 * m + 3] = acc / (2 * mp.pi)
        return out


def s1_sum(lat: LatticeSpec, q: int, ctx: PrecisionContext = DEFAULT_CTX) -> SumValue:
    """S_q^(1) for q >= 4: zero for even q, recurrence value for odd q >= 5."""
    if q < 4:
        raise ValueError(f"s1_sum handles q >= 4, got {q} (use s31_series for q = 3)")
    with ctx.working():
        if q % 2 == 0:
            return SumValue(value=mp.mpc(0), method=Method.RECURRENCE,
                            precision_estimate=mp.mpf(0))
        m = (q - 3) // 2
        val = s1_sums(lat, m, ctx)[q]
        return SumValue(value=mp.mpc(val), method=Method.RECURRENCE,
                        precision_estimate=DEFAULT_CTX.eps if ctx is None else ctx.eps)


#: the constants of the Natanzon-Filshtinsky expansion fixed by the
#: coefficient match: the linear part of the generating identity vanishes.
NF_C1 = Fraction(0)


def nf_c(s4) -> mp.mpf:
    """c = -10 S_4, the second undetermined constant of the expansion."""
    return -10 * s4
