"""Good/bad classification of m-primary monomial ideals.

An ideal is good when every minimal generator of every power ``I**l`` lies
in some box whose coordinates sum to ``l - 1``.  Equivalently, every product
of ``l`` generators lies in a box with coordinate sum at least ``l - 1``;
since corners contribute exactly, only products of non-corner generators
need checking, and a non-corner generator ``m`` can be capped below the
first ``K`` with ``m**K`` in ``<mu_1, ..., mu_n>**K``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .boxes import box_sum_range, largest_box
from .errors import NoKFound
from .monomial import (
    MonomialIdeal,
    MPrimaryProfile,
    ideal_power,
    mprimary_profile,
    non_corner_generators,
)


class Verdict(enum.Enum):
    GOOD = "good"
    BAD = "bad"


class Rule(enum.Enum):
    NECESSARY_FAILED = "necessary-failed"
    SUFFICIENT_PASSED = "sufficient-passed"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class Witness:
    """A product of ``power`` generators whose boxes all sum below ``power - 1``."""

    monomial: tuple
    power: int
    box_sum: int
    exponents: tuple = ()  # multiplicities of the non-corner generators, if known


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    rule: Rule
    profile: MPrimaryProfile
    witness: Witness | None = None
    k_bounds: tuple = ()
    non_corners: tuple = field(default=(), repr=False)

    @property
    def good(self) -> bool:
        return self.verdict is Verdict.GOOD


def weighted_degree(m: Sequence[int], d: MPrimaryProfile) -> Fraction:
    """``sum(alpha_i / d_i)`` as an exact rational."""
    return sum((Fraction(a, di) for a, di in zip(m, d.d)), Fraction(0))


def _violator(I: MonomialIdeal, d: MPrimaryProfile, bound: Fraction, only_non_corner: bool):
    gens = non_corner_generators(I, d) if only_non_corner else I.gens
    for g in gens:
        if weighted_degree(g, d) < bound:
            return g
    return None


def check_necessary(I: MonomialIdeal, d: MPrimaryProfile | None = None) -> bool:
    """Every minimal generator has weighted degree at least 1."""
    d = d or mprimary_profile(I)
    return _violator(I, d, Fraction(1), False) is None


def check_sufficient(I: MonomialIdeal, d: MPrimaryProfile | None = None) -> bool:
    """Every non-corner minimal generator has weighted degree at least n/2."""
    d = d or mprimary_profile(I)
    return _violator(I, d, Fraction(I.n, 2), True) is None


def in_mu_power(m: Sequence[int], K: int, d: MPrimaryProfile) -> bool:
    """Whether ``m**K`` lies in ``<mu_1, ..., mu_n>**K``.

    That power is generated by the corners with exponent sum K, and ``m**K``
    is divisible by ``mu**k`` iff ``k_i <= floor(K*alpha_i/d_i)``.
    """
    return sum(K * a // di for a, di in zip(m, d.d)) >= K


def power_index_K(m: Sequence[int], d: MPrimaryProfile) -> int:
    """Smallest K >= 1 with ``m**K`` in ``<mu>**K``; at most lcm(d)."""
    top = math.lcm(*d.d)
    for K in range(1, top + 1):
        if in_mu_power(m, K, d):
            return K
    raise NoKFound(f"no K <= {top} for {tuple(m)}")


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple]:
    """Tuples ``j`` with ``sum(j) == total`` and ``0 <= j_i <= caps[i]``, in lex order."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest = sum(caps[1:])
    for first in range(max(0, total - rest), min(caps[0], total) + 1):
        for tail in _bounded_compositions(total - first, caps[1:]):
            yield (first,) + tail


def _necessary_witness(m: tuple, d: MPrimaryProfile) -> Witness:
    # weighted degree of m is 1 - eps; the first l > 1/eps fails
    l = 1
    while True:
        p = tuple(l * a for a in m)
        s = sum(largest_box(p, d))
        if s < l - 1:
            return Witness(p, l, s)
        l += 1


def classify(I: MonomialIdeal) -> ClassificationReport:
    """Decide whether ``I`` is good, with a witness when it is not."""
    d = mprimary_profile(I)
    bad = _violator(I, d, Fraction(1), False)
    if bad is not None:
        return ClassificationReport(
            Verdict.BAD, Rule.NECESSARY_FAILED, d, witness=_necessary_witness(bad, d)
        )
    extras = non_corner_generators(I, d)
    ks = tuple(power_index_K(m, d) for m in extras)
    if _violator(I, d, Fraction(I.n, 2), True) is None:
        return ClassificationReport(
            Verdict.GOOD, Rule.SUFFICIENT_PASSED, d, k_bounds=ks, non_corners=tuple(extras)
        )
    caps = [k - 1 for k in ks]
    for total in range(1, sum(caps) + 1):
        for js in _bounded_compositions(total, caps):
            p = [0] * I.n
            for m, j in zip(extras, js):
                if j:
                    for i, e in enumerate(m):
                        p[i] += j * e
            s = sum(largest_box(p, d))
            if s < total - 1:
                return ClassificationReport(
                    Verdict.BAD,
                    Rule.EXHAUSTIVE,
                    d,
                    witness=Witness(tuple(p), total, s, js),
                    k_bounds=ks,
                    non_corners=tuple(extras),
                )
    return ClassificationReport(Verdict.GOOD, Rule.EXHAUSTIVE, d, k_bounds=ks, non_corners=tuple(extras))


def is_good(I: MonomialIdeal) -> bool:
    return classify(I).good


def verify_box_decomposition(I: MonomialIdeal, l: int) -> tuple[bool, tuple | None]:
    """Check the box decomposition principle on ``G(I**l)`` directly.

    Returns ``(True, None)`` or ``(False, g)`` with ``g`` the first minimal
    generator of ``I**l`` admitting no box of coordinate sum ``l - 1``.
    """
    if l < 1:
        raise ValueError("l must be positive")
    d = mprimary_profile(I)
    for g in ideal_power(I, l).gens:
        lo, hi = box_sum_range(g, d)
        if not lo <= l - 1 <= hi:
            return False, g
    return True, None
