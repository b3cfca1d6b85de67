"""Exception types shared across the package."""

from __future__ import annotations


class DimensionMismatch(ValueError):
    """Two objects live in polynomial rings with different numbers of variables."""

    def __init__(self, expected: int, got: int):
        super().__init__(f"dimension mismatch: expected {expected} variables, got {got}")
        self.expected = expected
        self.got = got


class NotMPrimary(ValueError):
    """The ideal has no pure power of some variable among its minimal generators."""

    def __init__(self, variable: int):
        super().__init__(f"ideal is not m-primary: no pure power of variable {variable}")
        self.variable = variable


class BadIdeal(ValueError):
    """Raised when an operation that requires a good ideal receives a bad one.

    ``report`` is the :class:`~ratliffrush.goodness.ClassificationReport` that
    rejected the ideal; its witness shows where the box decomposition fails.
    """

    def __init__(self, report):
        w = report.witness
        detail = "" if w is None else f" (witness {w.monomial} at power {w.power}, box sum {w.box_sum})"
        super().__init__("ideal is bad" + detail)
        self.report = report


class NoKFound(ArithmeticError):
    """No power index K up to lcm(d) exists; the necessary condition fails."""
