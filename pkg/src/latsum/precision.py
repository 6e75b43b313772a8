"""Working-precision bookkeeping shared by every numeric routine.

All arithmetic runs through mpmath.  A :class:`PrecisionContext` carries the
requested number of decimal digits plus guard digits; routines evaluate inside
``ctx.working()`` so intermediate rounding stays below the advertised
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp


@dataclass(frozen=True)
class PrecisionContext:
    """Decimal working precision threading through all numeric operations.

    ``digits`` is the precision promised to callers; ``guard_digits`` extra
    digits are carried internally.
    """

    digits: int = 50
    guard_digits: int = 10

    def __post_init__(self):
        if self.digits < 15:
            raise ValueError(f"digits must be >= 15, got {self.digits}")
        if self.guard_digits < 5:
            raise ValueError(f"guard_digits must be >= 5, got {self.guard_digits}")

    @property
    def dps(self) -> int:
        return self.digits + self.guard_digits

    @property
    def eps(self) -> mp.mpf:
        """10^(-digits), the advertised relative-error bound."""
        return mp.mpf(10) ** (-self.digits)

    @property
    def tail_eps(self) -> mp.mpf:
        """10^(-digits-guard), the internal truncation target."""
        return mp.mpf(10) ** (-self.dps)

    def working(self):
        """Context manager raising mpmath's precision to digits+guard."""
        return mp.workdps(self.dps)


DEFAULT_CTX = PrecisionContext()
