"""Freiman test for equigenerated m-primary monomial ideals.

For such ideals the analytic spread is n, so the Freiman equality reads
``|G(I**2)| == n*|G(I)| - n*(n-1)/2``.  It holds exactly when I is very good.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .closure import is_very_good
from .monomial import MonomialIdeal, ideal_product, is_mprimary


class FreimanVerdict(enum.Enum):
    FREIMAN = "freiman"
    NOT_FREIMAN = "not-freiman"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class FreimanReport:
    equigenerated: bool
    degree: int | None
    n: int
    g1: int
    g2: int
    bound: int
    mprimary: bool
    very_good: bool | None
    verdict: FreimanVerdict

    @property
    def equality_holds(self) -> bool:
        return self.g2 == self.bound


def is_equigenerated(I: MonomialIdeal) -> tuple[bool, int | None]:
    """Whether all minimal generators share one total degree, and that degree."""
    degs = {sum(g) for g in I.gens}
    if len(degs) == 1:
        return True, degs.pop()
    return False, None


def freiman_check(I: MonomialIdeal) -> FreimanReport:
    n = I.n
    eq, deg = is_equigenerated(I)
    primary = is_mprimary(I)
    g1 = len(I)
    g2 = len(ideal_product(I, I))
    bound = n * g1 - n * (n - 1) // 2
    very_good = is_very_good(I) if primary else None
    if not (eq and primary):
        verdict = FreimanVerdict.NOT_APPLICABLE
    elif g2 == bound:
        verdict = FreimanVerdict.FREIMAN
    else:
        verdict = FreimanVerdict.NOT_FREIMAN
    return FreimanReport(eq, deg, n, g1, g2, bound, primary, very_good, verdict)
