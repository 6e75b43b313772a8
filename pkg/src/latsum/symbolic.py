"""Exact polynomial representation of lattice sums in elliptic integrals.

Works in the Laurent-monomial ring over Gaussian rationals with variables

    k, (1-k^2), K, K', E, pi

where (1-k^2) is tracked as its own auxiliary exponent until the final
canonicalization so that the denominator cancellations of the derivative
operator can be asserted exactly rather than assumed.  The modular forms
V_r^(s) are generated by repeated application of the operator

    V -> (2ki/pi) (1-k^2) K^2 dV/dk        (times 2 for tau = (1+ix)/2)

and the sums S_q^(p)(tau) are assembled by substituting tau = i K'/K
(or (1 + i K'/K)/2) into the trigonometric-series identity.  Differentiation
acts only on expressions in (k, K, E): the substitution of tau is deferred
to the assembly step, so a dK'/dk rule is never needed.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import mpmath as mp

from .precision import DEFAULT_CTX, PrecisionContext
from .special import EllipticModulus, ellip_e, ellip_k


class FamilyAxis(enum.Enum):
    """The two tau families with exact polynomial representations."""

    IX = "ix"        # tau = i x
    HALF = "half"    # tau = (1 + i x)/2


class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        return cls(v)

    def __add__(self, other):
        other = self.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __mul__(self, other):
        other = self.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__
    __radd__ = __add__

    def __eq__(self, other):
        other = self.coerce(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def to_mpc(self) -> mp.mpc:
        return mp.mpc(self.re.numerator, self.im.numerator * 0) / self.re.denominator \
            if not self.im else mp.mpc(
                mp.mpf(self.re.numerator) / self.re.denominator,
                mp.mpf(self.im.numerator) / self.im.denominator)

    def text(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*I"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*I)"


I = GaussianRational(0, 1)

# monomial exponent slots: k, (1-k^2), K, K', E, pi
_NVARS = 6
_K, _U, _BK, _KP, _BE, _PI = range(_NVARS)
_VAR_TEXT = ("k", "(1-k^2)", "K", "K'", "E", "pi")


def _bump(d: dict, key: tuple, coeff: GaussianRational):
    cur = d.get(key)
    new = coeff if cur is None else cur + coeff
    if new:
        d[key] = new
    elif cur is not None:
        del d[key]


class SymExpr:
    """Immutable canonical multivariate Laurent polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple, GaussianRational] | None = None):
        self.terms = dict(terms or {})

    @classmethod
    def zero(cls) -> "SymExpr":
        return cls()

    @classmethod
    def term(cls, coeff, k=0, u=0, K=0, Kp=0, E=0, pi=0) -> "SymExpr":
        c = GaussianRational.coerce(coeff)
        if not c:
            return cls()
        return cls({(k, u, K, Kp, E, pi): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymExpr") -> "SymExpr":
        out = dict(self.terms)
        for key, c in other.terms.items():
            _bump(out, key, c)
        return SymExpr(out)

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + other.scale(-1)

    def __mul__(self, other: "SymExpr") -> "SymExpr":
        out: dict[tuple, GaussianRational] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                _bump(out, tuple(a + b for a, b in zip(k1, k2)), c1 * c2)
        return SymExpr(out)

    def scale(self, coeff) -> "SymExpr":
        c = GaussianRational.coerce(coeff)
        if not c:
            return SymExpr()
        return SymExpr({key: v * c for key, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SymExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def exponent_range(self, slot: int):
        if not self.terms:
            return (0, 0)
        vals = [key[slot] for key in self.terms]
        return min(vals), max(vals)

    # -- canonicalization -------------------------------------------------

    def expand_aux(self) -> "SymExpr":
        """Clear the (1-k^2) slot, dividing exactly where its exponent is
        negative; raises if the division leaves a remainder."""
        if not self.terms:
            return self
        umin = min(key[_U] for key in self.terms)
        shift = -umin if umin < 0 else 0
        # multiply through by (1-k^2)^shift, expand all u >= 0 binomially
        expanded: dict[tuple, GaussianRational] = {}
        for key, c in self.terms.items():
            b = key[_U] + shift
            for j in range(b + 1):
                coeff = c * GaussianRational(Fraction((-1) ** j * math.comb(b, j)))
                nk = list(key)
                nk[_U] = 0
                nk[0] = key[0] + 2 * j
                _bump(expanded, tuple(nk), coeff)
        poly = SymExpr(expanded)
        for _ in range(shift):
            poly = poly._divide_by_one_minus_k2()
        return poly

    def _divide_by_one_minus_k2(self) -> "SymExpr":
        """Exact division by (1-k^2) of an expression with u-slot zero."""
        groups: dict[tuple, dict[int, GaussianRational]] = {}
        kmin = min(key[0] for key in self.terms)
        for key, c in self.terms.items():
            rest = key[1:]
            groups.setdefault(rest, {})[key[0] - kmin] = c
        out: dict[tuple, GaussianRational] = {}
        for rest, coeffs in groups.items():
            deg = max(coeffs)
            quot: dict[int, GaussianRational] = {}
            work = dict(coeffs)
            # divide by (1 - k^2) from the top degree down
            for d in range(deg, 1, -1):
                c = work.get(d)
                if not c:
                    continue
                # (1 - k^2) * (-c k^(d-2)) contributes +c k^d and -c k^(d-2)
                q = -c
                _bump(quot, d - 2, q)
                _bump(work, d, -c)
                _bump(work, d - 2, c)
            if work:
                raise ArithmeticError(
                    "denominator (1-k^2) failed to cancel; upstream bug"
                )
            for d, c in quot.items():
                _bump(out, (d + kmin,) + rest, c)
        return SymExpr(out)

    # -- inspection -------------------------------------------------------

    def is_real(self) -> bool:
        return all(not c.im for c in self.terms.values())

    def real_part(self) -> "SymExpr":
        return SymExpr({k: GaussianRational(c.re)
                        for k, c in self.terms.items() if c.re})

    def imag_part(self) -> "SymExpr":
        return SymExpr({k: GaussianRational(c.im)
                        for k, c in self.terms.items() if c.im})

    def text(self) -> str:
        """Deterministic serialization: coeff * k^a (1-k^2)^b K^c K'^d E^e pi^f."""
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            factors = [self.terms[key].text()]
            for slot, e in enumerate(key):
                if e == 1:
                    factors.append(_VAR_TEXT[slot])
                elif e != 0:
                    factors.append(f"{_VAR_TEXT[slot]}^{e}")
            parts.append(" ".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"SymExpr({self.text()})"


def differentiate_k(e: SymExpr) -> SymExpr:
    """d/dk under the closure rules dE/dk = (E-K)/k and
    dK/dk = (E - (1-k^2)K)/(k(1-k^2)).

    Inputs must not contain K': tau-substitution is deferred to assembly, so
    K' is constant-free here by construction.
    """
    out: dict[tuple, GaussianRational] = {}
    for key, c in e.terms.items():
        a, b, kk, kp, ee, pp = key
        if kp != 0:
            raise ValueError("differentiate_k acts on (k, K, E) expressions only")
        if a:
            _bump(out, (a - 1, b, kk, kp, ee, pp), c * Fraction(a))
        if b:
            _bump(out, (a + 1, b - 1, kk, kp, ee, pp), c * Fraction(-2 * b))
        if kk:
            # K^c -> c K^(c-1) (E k^-1 u^-1 - K k^-1)
            _bump(out, (a - 1, b - 1, kk - 1, kp, ee + 1, pp), c * Fraction(kk))
            _bump(out, (a - 1, b, kk, kp, ee, pp), c * Fraction(-kk))
        if ee:
            _bump(out, (a - 1, b, kk, kp, ee, pp), c * Fraction(ee))
            _bump(out, (a - 1, b, kk + 1, kp, ee - 1, pp), c * Fraction(-ee))
    return SymExpr(out)


def apply_derivative_operator(e: SymExpr, fam: FamilyAxis = FamilyAxis.IX) -> SymExpr:
    """(2ki/pi)(1-k^2)K^2 d/dk, doubled for the HALF family (d tau/dx = i/2).

    The k(1-k^2) factor cancels every denominator introduced by the
    differentiation rules; the cancellation is checked, and the result is
    asserted to be a genuine polynomial in k.
    """
    mult = SymExpr.term(I * Fraction(2 if fam is FamilyAxis.IX else 4),
                        k=1, u=1, K=2, pi=-1)
    res = (differentiate_k(e) * mult).expand_aux()
    kmin, _ = res.exponent_range(0)
    if kmin < 0:
        raise ArithmeticError("negative k power survived the derivative operator")
    return res


def _poly_k(coeffs: list[tuple[int, int]]) -> SymExpr:
    """Polynomial in k^2 from [(c, power_of_k2), ...]."""
    out = SymExpr.zero()
    for c, pw in coeffs:
        out = out + SymExpr.term(Fraction(c), k=2 * pw)
    return out


def v_base(r: int, fam: FamilyAxis) -> SymExpr:
    """Exact V_r^(0) for r in {2, 4, 6} from the elliptic-integral tables."""
    K2 = SymExpr.term(1, K=2)
    K4 = SymExpr.term(1, K=4)
    K6 = SymExpr.term(1, K=6)
    KE = SymExpr.term(1, K=1, E=1)
    if fam is FamilyAxis.IX:
        if r == 2:
            return _poly_k([(-2, 0), (1, 1)]).scale(Fraction(4, 3)) * K2 + KE.scale(4)
        if r == 4:
            return _poly_k([(1, 0), (-1, 1), (1, 2)]).scale(Fraction(16, 45)) * K4
        if r == 6:
            p = _poly_k([(-2, 0), (1, 1)]) * _poly_k([(-1, 0), (2, 1)]) * _poly_k([(1, 0), (1, 1)])
            return p.scale(Fraction(64, 945)) * K6
    else:
        if r == 2:
            return _poly_k([(-5, 0), (4, 1)]).scale(Fraction(4, 3)) * K2 + KE.scale(8)
        if r == 4:
            return _poly_k([(1, 0), (-16, 1), (16, 2)]).scale(Fraction(16, 45)) * K4
        if r == 6:
            p = _poly_k([(-1, 0), (2, 1)]) * _poly_k([(-1, 0), (-32, 1), (32, 2)])
            return p.scale(Fraction(128, 945)) * K6
    raise ValueError(f"v_base handles r in {{2,4,6}}, got {r}")


_V_CACHE: dict[tuple[int, FamilyAxis], SymExpr] = {}


def v_classic(l: int, fam: FamilyAxis) -> SymExpr:
    """V_{2l}^(0) for l >= 4 by the Weierstrass-coefficient recurrence."""
    if l < 4:
        raise ValueError(f"v_classic needs l >= 4, got {l}; use v_base")
    key = (2 * l, fam)
    if key not in _V_CACHE:
        acc = SymExpr.zero()
        for j in range(2, l - 1):
            c = Fraction(3 * (2 * j - 1) * (2 * (l - j) - 1),
                         (2 * l - 1) * (2 * l + 1) * (l - 3))
            acc = acc + (v_even(2 * j, fam) * v_even(2 * (l - j), fam)).scale(c)
        _V_CACHE[key] = acc
    return _V_CACHE[key]


def v_even(r: int, fam: FamilyAxis) -> SymExpr:
    """V_r^(0): zero for odd r, table seed or recurrence for even r >= 2."""
    if r % 2 == 1:
        return SymExpr.zero()
    if r in (2, 4, 6):
        return v_base(r, fam)
    return v_classic(r // 2, fam)


_VD_CACHE: dict[tuple[int, int, FamilyAxis], SymExpr] = {}


def v_derived(s: int, r: int, fam: FamilyAxis) -> SymExpr:
    """V_r^(s) = d^s V_r^(0) / d tau^s as an exact polynomial in (k, K, E).

    The Theorem-1 degree bounds on the K-exponent are asserted on every
    result.
    """
    if s < 0 or r < 2 or r % 2:
        raise ValueError(f"v_derived needs s >= 0 and even r >= 2, got s={s}, r={r}")
    key = (s, r, fam)
    if key not in _VD_CACHE:
        if s == 0:
            res = v_even(r, fam)
        else:
            res = apply_derivative_operator(v_derived(s - 1, r, fam), fam)
        if not res.is_zero():
            kdeg_lo, kdeg_hi = res.exponent_range(_BK)
            lo = s + 1 if r == 2 else s + r
            hi = 2 * (s + 1) if r == 2 else 2 * s + r
            if kdeg_lo < lo or kdeg_hi > hi:
                raise ArithmeticError(
                    f"K-degree bound violated for V_{r}^({s}): "
                    f"[{kdeg_lo},{kdeg_hi}] vs [{lo},{hi}]"
                )
        _VD_CACHE[key] = res
    return _VD_CACHE[key]


def _im_i_pow(j: int) -> Fraction:
    return Fraction((0, 1, 0, -1)[j % 4])


def _i_pow(j: int) -> GaussianRational:
    return (GaussianRational(1), I, GaussianRational(-1), -I)[j % 4]


def _y_pow(j: int) -> SymExpr:
    """(K'/K)^j as a monomial."""
    return SymExpr.term(1, K=-j, Kp=j)


def _tau_pow(j: int, fam: FamilyAxis) -> SymExpr:
    """tau^j after the substitution tau = i K'/K or (1 + i K'/K)/2."""
    if fam is FamilyAxis.IX:
        return _y_pow(j).scale(_i_pow(j))
    out = SymExpr.zero()
    for a in range(j + 1):
        out = out + _y_pow(a).scale(_i_pow(a) * Fraction(math.comb(j, a), 2**j))
    return out


def _im_tau_pow(s: int, fam: FamilyAxis) -> SymExpr:
    """Im(tau^s) as a polynomial in K'/K."""
    if fam is FamilyAxis.IX:
        c = _im_i_pow(s)
        return _y_pow(s).scale(c) if c else SymExpr.zero()
    out = SymExpr.zero()
    for b in range(s + 1):
        c = _im_i_pow(b)
        if c:
            out = out + _y_pow(b).scale(Fraction(math.comb(s, b)) * c / 2**s)
    return out


def assemble_sum(p: int, q: int, fam: FamilyAxis) -> SymExpr:
    """Exact S_q^(p)(tau(x(k))) as a real-coefficient Laurent polynomial in
    (k, K, K', E, pi), for q - p >= 2.

    Identically zero for odd q - p (central symmetry).  The result is
    asserted real and polynomial in k, K, K'.
    """
    r = q - p
    if p < 0 or r < 2:
        raise ValueError(f"assemble_sum needs p >= 0 and q - p >= 2, got ({p},{q})")
    if r % 2 == 1:
        return SymExpr.zero()
    half = r // 2
    pref = _y_pow(half)
    if fam is FamilyAxis.HALF:
        pref = pref.scale(Fraction(1, 2**half))
    total = pref * v_even(r, fam)
    for t in range(1, p + 1):
        a_t = SymExpr.zero()
        for s in range(1, t + 1):
            c = Fraction((-1) ** (t - s) * math.comb(p, s) * math.comb(p - s, t - s))
            a_t = a_t + (_tau_pow(t - s, fam) * _im_tau_pow(s, fam)).scale(c)
        if a_t.is_zero():
            continue
        w_t = v_derived(t, r, fam).scale(
            Fraction((-1) ** t, math.factorial(t) * math.comb(r + t - 1, r - 1)))
        total = total + (pref * a_t * w_t).scale(GaussianRational(0, -2))
    total = total.expand_aux()
    if not total.is_real():
        raise ArithmeticError(f"imaginary residue in S_{q}^({p}): {total.imag_part().text()}")
    kmin, _ = total.exponent_range(0)
    bigk_min, _ = total.exponent_range(_BK)
    kp_min, _ = total.exponent_range(_KP)
    if kmin < 0 or bigk_min < 0 or kp_min < 0:
        raise ArithmeticError("negative exponent survived assembly")
    return total


def s2_closed_form(fam: FamilyAxis) -> SymExpr:
    """The Rayleigh S_2 forms: (4/3)K'(3E + (k^2-2)K) and 2K'(2E + (4k^2-5)K/3)."""
    Kp = SymExpr.term(1, Kp=1)
    if fam is FamilyAxis.IX:
        inner = SymExpr.term(3, E=1) + _poly_k([(-2, 0), (1, 1)]) * SymExpr.term(1, K=1)
        return (Kp * inner).scale(Fraction(4, 3))
    inner = SymExpr.term(2, E=1) + _poly_k([(-5, 0), (4, 1)]).scale(Fraction(1, 3)) * SymExpr.term(1, K=1)
    return (Kp * inner).scale(2)


def eval_sym_values(e: SymExpr, k_val, big_k, big_kp, big_e,
                    ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpc:
    """Substitute explicit numeric values for (k, K, K', E) and pi."""
    with ctx.working():
        vals = (mp.mpf(k_val), 1 - mp.mpf(k_val) ** 2, mp.mpf(big_k),
                mp.mpf(big_kp), mp.mpf(big_e), mp.pi)
        total = mp.mpc(0)
        for key, c in e.terms.items():
            term = mp.mpc(mp.mpf(c.re.numerator) / c.re.denominator,
                          mp.mpf(c.im.numerator) / c.im.denominator)
            for slot, exp in enumerate(key):
                if exp:
                    term *= vals[slot] ** exp
            total += term
        return total


def eval_sym(e: SymExpr, k: EllipticModulus, ctx: PrecisionContext = DEFAULT_CTX) -> mp.mpc:
    """Numeric value of a symbolic expression at modulus k via the AGM."""
    with ctx.working():
        big_k = ellip_k(k, ctx)
        big_kp = ellip_k(k.complementary(), ctx)
        big_e = ellip_e(k, ctx)
        return eval_sym_values(e, k.k, big_k, big_kp, big_e, ctx)
