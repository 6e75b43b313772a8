"""Special functions every other module consumes.

Gamma, the complete elliptic integrals K and E (computed by the quadratically
convergent arithmetic-geometric mean iteration), the modulus ratio
x(k) = K(k')/K(k), its closed-form derivative, and the Legendre-relation
residual used as a module-wide sanity identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .precision import DEFAULT_CTX, PrecisionContext


@dataclass(frozen=True)
class EllipticModulus:
    """An elliptic modulus k in (0,1) together with k' = sqrt(1-k^2)."""

    k: mp.mpf
    k_prime: mp.mpf

    @classmethod
    def from_k(cls, k, ctx: PrecisionContext = DEFAULT_CTX) -> "EllipticModulus":
        with ctx.working():
            k = mp.mpf(k)
            if not (0 < k < 1):
                raise ValueError(f"elliptic modulus must lie in (0,1), got {k}")
            return cls(k=k, k_prime=mp.sqrt(1 - k * k))

    def complementary(self) -> "EllipticModulus":
        return EllipticModulus(k=self.k_prime, k_prime=self.k)


def gamma(x, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """Euler's gamma function for positive real argument at ctx precision."""
    with ctx.working():
        x = mp.mpf(x)
        if x <= 0:
            raise ValueError(f"gamma requires x > 0, got {x}")
        return mp.gamma(x)


def gamma_oracle(x, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """Independent check value for gamma via tanh-sinh quadrature.

    Integrates t^(x-1) e^(-t) over (0, inf) with a different algorithm than
    the production gamma path; used only by tests to validate gamma at the
    arguments dominating the closed-form tables (1/4, 1/8, 3/8, 1/3).
    """
    with mp.workdps(2 * ctx.dps):
        x = mp.mpf(x)
        if x <= 0:
            raise ValueError(f"gamma requires x > 0, got {x}")
        # u = t^x regularizes the endpoint singularity on (0, 1)
        head = mp.quad(lambda u: mp.exp(-u ** (1 / x)), [0, 1]) / x
        tail = mp.quad(lambda t: t ** (x - 1) * mp.exp(-t), [1, mp.inf])
        val = head + tail
    with ctx.working():
        return +val


def _agm_sequence(k: EllipticModulus, ctx: PrecisionContext):
    """AGM iterates (a_n, b_n, c_n) starting from (1, k', k)."""
    a, b, c = mp.mpf(1), k.k_prime, k.k
    seq = [(a, b, c)]
    while abs(c) > ctx.tail_eps * abs(a):
        a, b, c = (a + b) / 2, mp.sqrt(a * b), (a - b) / 2
        seq.append((a, b, c))
    return seq


def ellip_k(k: EllipticModulus, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """Complete elliptic integral of the first kind K(k) by the AGM."""
    with ctx.working():
        seq = _agm_sequence(k, ctx)
        return mp.pi / (2 * seq[-1][0])


def ellip_e(k: EllipticModulus, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """Complete elliptic integral of the second kind E(k) by the AGM.

    E = K * (1 - sum_n 2^(n-1) c_n^2) over the AGM iterates.
    """
    with ctx.working():
        seq = _agm_sequence(k, ctx)
        s = mp.mpf(0)
        for n, (_, _, c) in enumerate(seq):
            s += mp.mpf(2) ** (n - 1) * c * c
        bigk = mp.pi / (2 * seq[-1][0])
        return bigk * (1 - s)


def modulus_ratio(k: EllipticModulus, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """x(k) = K(k')/K(k), strictly decreasing from +inf to 0 on (0,1)."""
    with ctx.working():
        return ellip_k(k.complementary(), ctx) / ellip_k(k, ctx)


def dx_dk(k: EllipticModulus, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """Closed-form derivative of the modulus ratio: -pi / (2k(1-k^2)K^2)."""
    with ctx.working():
        bigk = ellip_k(k, ctx)
        return -mp.pi / (2 * k.k * (1 - k.k * k.k) * bigk * bigk)


def legendre_residual(k: EllipticModulus, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpf:
    """E K' + E' K - K K' - pi/2; vanishes identically, returned as a check."""
    with ctx.working():
        kc = k.complementary()
        bigk, bigkp = ellip_k(k, ctx), ellip_k(kc, ctx)
        bige, bigep = ellip_e(k, ctx), ellip_e(kc, ctx)
        return bige * bigkp + bigep * bigk - bigk * bigkp - mp.pi / 2


def modulus_from_ratio(x, ctx: PrecisionContext = DEFAULT_CTX) -> EllipticModulus:
    """Invert x(k) = K(k')/K(k) on (0,1) by bisection with secant polish.

    x(k) is strictly decreasing, so a single bracket on (1e-10, 1-1e-10)
    suffices for every x arising from a lattice with Im(tau) in a sane range.
    """
    with ctx.working():
        x = mp.mpf(x)
        if x <= 0:
            raise ValueError(f"modulus ratio must be positive, got {x}")

        def f(kv):
            return modulus_ratio(EllipticModulus.from_k(kv, ctx), ctx) - x

        lo, hi = mp.mpf("1e-10"), 1 - mp.mpf("1e-10")
        flo, fhi = f(lo), f(hi)
        if not (flo > 0 > fhi):
            raise ValueError(f"failed to bracket modulus for ratio x={x}")
        # bisection to ~machine-independent half width, then secant
        for _ in range(20):
            mid = (lo + hi) / 2
            if f(mid) > 0:
                lo = mid
            else:
                hi = mid
        a, b = lo, hi
        fa, fb = f(a), f(b)
        for _ in range(200):
            if fb == fa:
                break
            c = b - fb * (b - a) / (fb - fa)
            if not (lo < c < hi):
                c = (a + b) / 2
            fc = f(c)
            a, fa, b, fb = b, fb, c, fc
            if abs(b - a) < ctx.tail_eps:
                break
        return EllipticModulus.from_k(b, ctx)
