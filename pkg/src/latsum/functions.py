"""Laurent-series evaluation of the doubly periodic lattice functions.

The Weierstrass zeta and P functions and the Eisenstein functions of first
and second order share one Laurent expansion around the origin,

    E_1(z) = 1/z   - sum_{l>=1} S_{2l} z^(2l-1)
    E_2(z) = 1/z^2 + sum_{l>=1} (2l-1) S_{2l} z^(2l-2)

with zeta and P obtained by dropping the l = 1 term.  The exponents are
chosen so that -dE_1/dz = E_2 holds term by term; this also makes E_2 - P
constant equal to S_2, both of which are validated against the direct
double-sum oracle in the tests.  The lattice is the unit-area cell with
periods omega_1 and omega_1 tau, for which the normalized sums S_{2l} are
precisely the Laurent coefficients.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath as mp

from .lattice import LatticeSpec, square
from .precision import DEFAULT_CTX, PrecisionContext
from .recurrence import classic_sums
from .trig import s2_rayleigh


class FunctionKind(enum.Enum):
    ZETA = "zeta"
    WP = "wp"
    E1 = "e1"
    E2 = "e2"


@dataclass(frozen=True)
class SeriesValue:
    value: mp.mpc
    tail: mp.mpf


_MAX_L = 400


def _reduce_cell(z: mp.mpc, lat: LatticeSpec) -> mp.mpc:
    """Translate z by lattice periods into the cell neighborhood of 0."""
    w1 = lat.omega1
    beta = mp.nint(z.imag / (w1 * lat.im_tau))
    alpha = mp.nint(z.real / w1 - beta * lat.tau.real)
    return z - w1 * (alpha + beta * lat.tau)


def _coefficients(lat: LatticeSpec, L: int, ctx: PrecisionContext) -> dict[int, mp.mpf]:
    sums = {2: s2_rayleigh(lat, ctx).value}
    sums.update(classic_sums(lat, 2 * L, ctx))
    return sums


def _adaptive_l(z_abs: mp.mpf, lat: LatticeSpec, ctx: PrecisionContext) -> int:
    """Smallest truncation order whose geometric tail bound clears tail_eps."""
    # nearest lattice point of the unit-area cell
    d_min = lat.omega1 * min(mp.mpf(1), abs(lat.tau), abs(lat.tau - 1))
    rho = z_abs / d_min
    if rho >= mp.mpf("0.999"):
        raise ValueError("z too close to a lattice point for the Laurent series")
    L = 2
    bound = mp.mpf(4)  # crude cap on (2l-1) S_{2l} d_min^(-2l+2) growth
    while L < _MAX_L:
        if bound * (2 * L + 1) ** 2 * rho ** (2 * L) < ctx.tail_eps:
            break
        L += 1
    return L


def weierstrass_series(kind: FunctionKind, z, lat: LatticeSpec, L: int | None = None,
                       ctx: PrecisionContext = DEFAULT_CTX) -> SeriesValue:
    """Evaluate zeta, P, E_1 or E_2 at z by the truncated Laurent series.

    E_2 and P are elliptic, so z is first reduced modulo the lattice; the
    quasi-periodic zeta and E_1 are evaluated where given and require z
    inside the Laurent disk.
    """
    with ctx.working():
        z = mp.mpc(z)
        elliptic = kind in (FunctionKind.WP, FunctionKind.E2)
        if elliptic:
            z = _reduce_cell(z, lat)
        if abs(z) < ctx.tail_eps:
            raise ValueError(f"{kind.value} has a pole at lattice point {z}")
        if L is None:
            L = _adaptive_l(abs(z), lat, ctx)
        if L < 2:
            raise ValueError(f"truncation order must be >= 2, got {L}")
        sums = _coefficients(lat, L, ctx)
        first = 1 if kind in (FunctionKind.E1, FunctionKind.E2) else 2
        if kind in (FunctionKind.E1, FunctionKind.ZETA):
            acc = 1 / z
            for l in range(first, L + 1):
                acc -= sums[2 * l] * z ** (2 * l - 1)
            tail = abs(sums[2 * L]) * abs(z) ** (2 * L + 1)
        else:
            acc = 1 / z ** 2
            for l in range(first, L + 1):
                acc += (2 * l - 1) * sums[2 * l] * z ** (2 * l - 2)
            tail = (2 * L + 1) * abs(sums[2 * L]) * abs(z) ** (2 * L)
        return SeriesValue(acc, tail)


def isotropy_e2(points, lat: LatticeSpec | None = None,
                ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """Average of E_2 over all ordered point pairs.

    e_2 = (1/N^2) sum_{k,m} E_2(a_k - a_m), with the diagonal convention
    E_2(0) := S_2 = pi.  Equality with pi is a necessary condition for
    macroscopic isotropy of the point configuration.
    """
    if lat is None:
        lat = square()
    pts = [mp.mpc(p) for p in points]
    if not pts:
        raise ValueError("at least one point is required")
    with ctx.working():
        s2 = s2_rayleigh(lat, ctx).value
        total = mp.mpc(0)
        for i, a in enumerate(pts):
            for j, b in enumerate(pts):
                if i == j:
                    total += s2
                    continue
                d = _reduce_cell(a - b, lat)
                if abs(d) < ctx.tail_eps:
                    raise ValueError(
                        f"points {i} and {j} coincide modulo the lattice")
                total += weierstrass_series(FunctionKind.E2, a - b, lat, None, ctx).value
        e2 = total / len(pts) ** 2
        return e2.real if abs(e2.imag) < ctx.tail_eps * len(pts) ** 2 else e2
