"""Ground-truth evaluation of S_q^(p) by direct double summation.

Deliberately simple and auditable.  Two routes:

* ``sum_absolute`` -- plain truncated double sum over a square index block,
  for absolutely convergent indices (q - p >= 3).  Double precision via
  numpy; the tail estimate dominates the error.

* ``sum_eisenstein`` -- the iterated-limit order of the Eisenstein method:
  inner index m summed to infinity first, outer index n truncated.  The
  inner sum is either truncated directly with an integral tail correction
  (``inner="direct"``, independent of every other engine) or taken in closed
  form through the eps-functions (``inner="closed"``, arbitrary precision,
  exponentially convergent).  ``reverse_order=True`` swaps the roles of m
  and n, which changes the value of conditionally convergent sums; that
  sensitivity is part of the contract.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np

from .lattice import LatticeSpec, Method, SumIndex, SumValue
from .precision import DEFAULT_CTX, PrecisionContext
from .trig import eps_l


def sum_absolute(idx: SumIndex, lat: LatticeSpec, radius: int = 200,
                 ctx: PrecisionContext = DEFAULT_CTX) -> SumValue:
    """(Im tau)^((q-p)/2) sum' conj(m+n tau)^p/(m+n tau)^q, 0<max(|m|,|n|)<=radius."""
    p, q = idx.p, idx.q
    if idx.gap < 3:
        raise ValueError(
            f"sum_absolute needs q - p >= 3 (got {idx.gap}); "
            "use sum_eisenstein for the conditionally convergent diagonal"
        )
    if radius < 10:
        raise ValueError(f"radius must be >= 10, got {radius}")
    tau = complex(lat.tau)
    m = np.arange(-radius, radius + 1, dtype=np.float64)
    total = 0 + 0j
    for n in range(-radius, radius + 1):
        w = m + n * tau
        if n == 0:
            w = w[m != 0]
        total += np.sum(np.conj(w) ** p / w**q)
    pref = lat.tau.imag ** (mp.mpf(idx.gap) / 2)
    # tail of a 2D sum with integrand ~ |w|^(p-q): O(radius^(p-q+2))
    tail = 8.0 * float(radius) ** (p - q + 2)
    return SumValue(value=mp.mpc(total) * pref, method=Method.EISENSTEIN_ORACLE,
                    precision_estimate=mp.mpf(tail))


def _row_tail(l: int, a: complex, big_m: int) -> complex:
    """Integral estimate of sum_{|m| > M} (m+a)^(-l), midpoint rule."""
    x = big_m + 0.5
    return ((x + a) ** (1 - l) + (-1) ** l * (x - a) ** (1 - l)) / (l - 1)


def _inner_direct(p: int, q: int, a: complex, big_m: int) -> complex:
    """sum_m conj(m+a)^p/(m+a)^q over all integers m, truncated at |m| <= M
    with the tail restored from conj(w) = w - 2i Im(a)."""
    m = np.arange(-big_m, big_m + 1, dtype=np.float64)
    w = m + a
    total = complex(np.sum(np.conj(w) ** p / w**q))
    shift = -2j * a.imag
    for j in range(p + 1):
        total += math.comb(p, j) * shift**j * _row_tail(q - p + j, a, big_m)
    return total


def _inner_closed(p: int, q: int, a, ctx: PrecisionContext) -> mp.mpc:
    """Exact inner sum via eps-functions: sum_j C(p,j) (-2i Im a)^j eps_{q-p+j}(a)."""
    a = mp.mpc(a)
    shift = -2j * a.imag
    total = mp.mpc(0)
    for j in range(p + 1):
        l = q - p + j
        if a.imag > 0:
            e = eps_l(l, a, ctx)
        else:
            e = mp.conj(eps_l(l, mp.conj(a), ctx))
        total += math.comb(p, j) * shift**j * e
    return total


def sum_eisenstein(idx: SumIndex, lat: LatticeSpec, N: int = 100,
                   ctx: PrecisionContext = DEFAULT_CTX, inner: str = "direct",
                   inner_radius: int = 4000,
                   reverse_order: bool = False) -> SumValue:
    """Iterated Eisenstein sum: inner index summed first, outer truncated at N.

    The written order is outer n, inner m; ``reverse_order=True`` evaluates
    the opposite iteration (n inner, m outer), which differs on the
    conditionally convergent diagonal q - p = 2.
    """
    p, q, r = idx.p, idx.q, idx.gap
    if r < 2:
        raise ValueError(f"sum_eisenstein needs q - p >= 2, got {r}")
    if N < 20:
        raise ValueError(f"N must be >= 20, got {N}")
    if inner not in ("direct", "closed"):
        raise ValueError(f"unknown inner mode {inner!r}")

    with ctx.working():
        tau = lat.tau
        if reverse_order:
            # w = m + n tau = tau (n + m/tau): same machinery with the roles
            # of the indices swapped and a factor conj(tau)^p / tau^q
            factor = mp.conj(tau) ** p / tau**q
            offsets = [(m, m / tau) for m in range(-N, N + 1) if m != 0]
        else:
            factor = mp.mpc(1)
            offsets = [(n, n * tau) for n in range(-N, N + 1) if n != 0]

        zero_row = 2 * mp.zeta(r) if r % 2 == 0 else mp.mpf(0)
        total = factor * zero_row
        if inner == "closed":
            for _, a in offsets:
                total += factor * _inner_closed(p, q, a, ctx)
            est = ctx.eps * 100
        else:
            acc = 0 + 0j
            for _, a in offsets:
                acc += _inner_direct(p, q, complex(a), inner_radius)
            total += factor * mp.mpc(acc)
            est = mp.mpf(max(1e-9, N * 10.0 / inner_radius**3))
        pref = tau.imag ** (mp.mpf(r) / 2)
        return SumValue(value=pref * total, method=Method.EISENSTEIN_ORACLE,
                        precision_estimate=est)
