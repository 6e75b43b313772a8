"""Exponentially convergent trigonometric-series evaluation of lattice sums.

Everything here runs through the one-dimensional sums
eps_l(z) = sum_m (m+z)^(-l), evaluated in the variable w = e^(2 pi i z)
(|w| < 1 for Im z > 0) so no overflow or cancellation occurs for large
Im z.  The derivative recurrence eps_{l+1} = -(1/l) d eps_l / dz acts on the
w-expansion as d/dz = 2 pi i w d/dw, which turns eps_2 = pi^2/sin^2(pi z)
into the geometric-type series

    eps_l(z) = (-2 pi i)^l / (l-1)! * sum_{d>=1} d^(l-1) w^d.
"""

from __future__ import annotations

import math

import mpmath as mp

from .lattice import LatticeSpec, Method, SumIndex, SumValue
from .precision import DEFAULT_CTX, PrecisionContext

#: lattices with Im(tau) below this are refused: |w| approaches 1 and the
#: q-series loses its exponential convergence.
MIN_IM_TAU = 0.05


def eps_l(l: int, z, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpc:
    """sum_m (m+z)^(-l) for Im z > 0 (Eisenstein pairing for l = 1)."""
    if l < 1:
        raise ValueError(f"eps_l needs l >= 1, got {l}")
    with ctx.working():
        z = mp.mpc(z)
        if z.imag <= 0:
            raise ValueError(f"eps_l needs Im z > 0, got {z}")
        w = mp.exp(2j * mp.pi * z)
        if l == 1:
            # pi*cot(pi z) written in w
            return mp.pi * 1j * (1 + w) / (w - 1)
        pref = (-2j * mp.pi) ** l / mp.factorial(l - 1)
        absw = abs(w)
        total = mp.mpc(0)
        wd = mp.mpc(1)
        d = 0
        # terms d^(l-1) w^d peak near d = (l-1)/(-log|w|); sum past the peak
        peak = (l - 1) / (-mp.log(absw)) if absw > 0 else 0
        while True:
            d += 1
            wd *= w
            term = mp.mpf(d) ** (l - 1) * wd
            total += term
            if d > peak and abs(term) < ctx.tail_eps:
                break
        return pref * total


class EpsDerivativeTable:
    """Cached values eps_l(n*tau) for one lattice.

    Immutable after construction of each entry; entries are filled lazily and
    the geometric decay in n (ratio |e^(2 pi i tau)|) bounds how many are
    ever requested.
    """

    def __init__(self, tau, ctx: PrecisionContext = DEFAULT_CTX):
        with ctx.working():
            self.tau = mp.mpc(tau)
        if self.tau.imag < MIN_IM_TAU:
            raise ValueError(
                f"Im(tau) = {self.tau.imag} below {MIN_IM_TAU}: "
                "trigonometric series would lose precision, use the oracle"
            )
        self.ctx = ctx
        self._cache: dict[tuple[int, int], mp.mpc] = {}

    def value(self, l: int, n: int) -> mp.mpc:
        """eps_l(n*tau) for n >= 1."""
        key = (l, n)
        if key not in self._cache:
            self._cache[key] = eps_l(l, n * self.tau, self.ctx)
        return self._cache[key]

    def weighted_sum(self, l: int, t: int) -> mp.mpc:
        """sum_{n>=1} n^t eps_l(n*tau), truncated at the tail target."""
        with self.ctx.working():
            total = mp.mpc(0)
            n = 0
            while True:
                n += 1
                term = mp.mpf(n) ** t * self.value(l, n)
                total += term
                if n > 3 and abs(term) < ctx_floor(self.ctx):
                    break
                if n > 10000:  # pragma: no cover - unreachable for Im tau >= 0.05
                    raise RuntimeError("eps series failed to converge")
            return total


def ctx_floor(ctx: PrecisionContext) -> mp.mpf:
    return ctx.tail_eps / 100


def s2_rayleigh(lat: LatticeSpec, ctx: PrecisionContext = DEFAULT_CTX) -> SumValue:
    """S_2 by Rayleigh's series pi^2 Im(tau) [1/3 + 2 sum_m 1/sin^2(m pi tau)].

    1/sin^2(m pi tau) = eps_2(m tau)/pi^2, so this is the l = 2 row of the
    eps machinery; the Eisenstein summation order is built into the formula.
    """
    with ctx.working():
        table = EpsDerivativeTable(lat.tau, ctx)
        tail = mp.mpc(0)
        n = 0
        while True:
            n += 1
            term = table.value(2, n)
            tail += term
            if n > 3 and abs(term) < ctx_floor(ctx):
                break
        val = lat.im_tau * (mp.pi**2 / 3 + 2 * tail)
        return SumValue(value=val, method=Method.TRIG_SERIES, precision_estimate=ctx.eps)


def classic_sum(r: int, lat: LatticeSpec, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpc:
    """Classic lattice sum S_r for r >= 2 via the eps series.

    S_r = (Im tau)^(r/2) [2 zeta(r) + 2 sum_{n>=1} eps_r(n tau)] for even r;
    identically 0 for odd r (central symmetry).  r = 2 carries the Eisenstein
    summation value.
    """
    if r < 2:
        raise ValueError(f"classic sums need r >= 2, got {r}")
    with ctx.working():
        if r % 2 == 1:
            return mp.mpc(0)
        table = EpsDerivativeTable(lat.tau, ctx)
        inner = table.weighted_sum(r, 0)
        return lat.im_tau ** (mp.mpf(r) / 2) * (2 * mp.zeta(r) + 2 * inner)


def s31_series(lat: LatticeSpec, ctx: PrecisionContext = DEFAULT_CTX) -> SumValue:
    """S_3^(1) = S_2 - 4 pi^3 i (Im tau)^2 sum_m m cos(m pi tau)/sin^3(m pi tau).

    m cos(m pi tau)/sin^3(m pi tau) = m eps_3(m tau)/pi^3.
    """
    with ctx.working():
        s2 = s2_rayleigh(lat, ctx).value
        table = EpsDerivativeTable(lat.tau, ctx)
        series = table.weighted_sum(3, 1)
        val = s2 - 4j * lat.im_tau**2 * series
        return SumValue(value=val, method=Method.TRIG_SERIES, precision_estimate=ctx.eps)


def _coefficient(p: int, t: int, tau: mp.mpc) -> mp.mpc:
    """sum_{s=1}^t (-1)^(t-s) C(p,s) C(p-s,t-s) tau^(t-s) Im(tau^s)."""
    total = mp.mpc(0)
    for s in range(1, t + 1):
        c = math.comb(p, s) * math.comb(p - s, t - s)
        total += (-1) ** (t - s) * c * tau ** (t - s) * (tau**s).imag
    return total


def sum_fast(idx: SumIndex, lat: LatticeSpec, ctx: PrecisionContext = DEFAULT_CTX) -> SumValue:
    """S_q^(p) by the trigonometric-series formula, for q - p >= 2.

    S_q^(p) = S_{q-p}
              - 2i (Im tau)^((q-p)/2) sum_{t=1}^p A_t sum_n n^t eps_{q-p+t}(n tau)

    with the outer sum over all nonzero n folded onto n >= 1: the n and -n
    terms carry the ratio (-1)^(q-p), so odd q - p vanishes identically.
    """
    p, q, r = idx.p, idx.q, idx.gap
    if r < 2:
        raise ValueError(f"sum_fast needs q - p >= 2, got p={p}, q={q}")
    with ctx.working():
        if r % 2 == 1:
            # p + q odd: the sum vanishes by central symmetry
            return SumValue(value=mp.mpc(0), method=Method.TRIG_SERIES,
                            precision_estimate=ctx.tail_eps)
        if r == 2:
            base = s2_rayleigh(lat, ctx).value
        else:
            base = classic_sum(r, lat, ctx)
        if p == 0:
            return SumValue(value=base, method=Method.TRIG_SERIES,
                            precision_estimate=ctx.eps)
        table = EpsDerivativeTable(lat.tau, ctx)
        corr = mp.mpc(0)
        for t in range(1, p + 1):
            a_t = _coefficient(p, t, lat.tau)
            if a_t == 0:
                continue
            corr += a_t * 2 * table.weighted_sum(r + t, t)
        val = base - 2j * lat.im_tau ** (mp.mpf(r) / 2) * corr
        return SumValue(value=val, method=Method.TRIG_SERIES, precision_estimate=ctx.eps)
