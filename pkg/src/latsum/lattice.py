"""Canonical lattice descriptions and the sum-index vocabulary.

A lattice is represented by its period ratio tau with Im(tau) > 0; the first
period omega1 = 1/sqrt(Im tau) follows from the unit-cell-area normalization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath as mp

from .precision import DEFAULT_CTX, PrecisionContext


class Family(enum.Enum):
    RECTANGULAR = "rectangular"  # tau = i*x
    RHOMBIC = "rhombic"          # tau = (1 + i*x)/2
    GENERAL = "general"


class Method(enum.Enum):
    EISENSTEIN_ORACLE = "oracle"
    TRIG_SERIES = "fast"
    RECURRENCE = "recurrence"
    SYMBOLIC_ELLIPTIC = "symbolic"


@dataclass(frozen=True)
class SumIndex:
    """The pair (p, q) naming a polyanalytic lattice sum S_q^(p)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"conjugate power p must be >= 0, got {self.p}")

    @property
    def gap(self) -> int:
        """q - p; 2 is the conditionally convergent diagonal, >= 3 absolute."""
        return self.q - self.p


@dataclass(frozen=True)
class SumValue:
    value: mp.mpc
    method: Method
    precision_estimate: mp.mpf

    @property
    def real(self) -> mp.mpf:
        return self.value.real if isinstance(self.value, mp.mpc) else mp.mpf(self.value)


@dataclass(frozen=True)
class LatticeSpec:
    tau: mp.mpc
    omega1: mp.mpf
    family: Family
    symmetry_order: int

    @property
    def im_tau(self) -> mp.mpf:
        return self.tau.imag

    @property
    def x(self) -> mp.mpf:
        """The family parameter: Im(tau) for rectangular, 2 Im(tau) for rhombic."""
        if self.family is Family.RHOMBIC:
            return 2 * self.tau.imag
        return self.tau.imag


def _classify(tau: mp.mpc, ctx: PrecisionContext):
    tol = mp.mpf(10) ** (-(ctx.digits // 2))
    if abs(tau.real) <= tol:
        family = Family.RECTANGULAR
    elif abs(tau.real - mp.mpf(1) / 2) <= tol:
        family = Family.RHOMBIC
    else:
        family = Family.GENERAL
    if abs(tau - mp.mpc(0, 1)) <= tol:
        order = 4
    elif abs(tau - (1 + mp.mpc(0, 1) * mp.sqrt(3)) / 2) <= tol:
        order = 6
    else:
        order = 2
    return family, order


def make_lattice(tau, ctx: PrecisionContext = DEFAULT_CTX) -> LatticeSpec:
    """Build a normalized LatticeSpec from an arbitrary tau with Im(tau) > 0."""
    with ctx.working():
        tau = mp.mpc(tau)
        if tau.imag <= 0:
            raise ValueError(f"Im(tau) must be positive, got {tau}")
        family, order = _classify(tau, ctx)
        return LatticeSpec(
            tau=tau,
            omega1=1 / mp.sqrt(tau.imag),
            family=family,
            symmetry_order=order,
        )


def square(ctx: PrecisionContext = DEFAULT_CTX) -> LatticeSpec:
    return make_lattice(mp.mpc(0, 1), ctx)


def hexagonal(ctx: PrecisionContext = DEFAULT_CTX) -> LatticeSpec:
    with ctx.working():
        return make_lattice((1 + mp.mpc(0, 1) * mp.sqrt(3)) / 2, ctx)


def rectangular(x, ctx: PrecisionContext = DEFAULT_CTX) -> LatticeSpec:
    with ctx.working():
        x = mp.mpf(x)
        if x <= 0:
            raise ValueError(f"rectangular aspect x must be positive, got {x}")
        return make_lattice(mp.mpc(0, 1) * x, ctx)


def rhombic(x, ctx: PrecisionContext = DEFAULT_CTX) -> LatticeSpec:
    with ctx.working():
        x = mp.mpf(x)
        if x <= 0:
            raise ValueError(f"rhombic aspect x must be positive, got {x}")
        return make_lattice((1 + mp.mpc(0, 1) * x) / 2, ctx)


def symmetry_vanishes(idx: SumIndex, lat: LatticeSpec) -> bool:
    """True iff S_q^(p) = 0 exactly by the lattice's rotational symmetry.

    Only meaningful for absolutely convergent indices (q - p >= 3): Eisenstein
    summation of the diagonal breaks rotational symmetry, e.g. the hexagonal
    S_3^(1) = pi/2 rather than 0.
    """
    if idx.gap < 3:
        raise ValueError(
            f"symmetry_vanishes needs q - p >= 3, got p={idx.p}, q={idx.q}"
        )
    return (idx.p + idx.q) % lat.symmetry_order != 0
