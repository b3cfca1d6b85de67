"""Boxes, corners, box ideals and cones over the grid of an m-primary ideal.

With ``d`` the pure-power profile of I, the box with coordinates ``a`` is
``prod_i [a_i*d_i, (a_i+1)*d_i]``.  Boxes share faces, so a monomial whose
i-th exponent is a positive multiple of ``d_i`` sits in two adjacent boxes
along that axis.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .monomial import (
    MonomialIdeal,
    MPrimaryProfile,
    colon_monomial,
    ideal_power,
    mprimary_profile,
)

BoxCoord = tuple  # tuple[int, ...]


def _check(m: Sequence[int], d: MPrimaryProfile) -> None:
    if len(m) != d.n:
        raise DimensionMismatch(d.n, len(m))


def box_candidates(alpha: int, di: int) -> list[int]:
    """Box coordinates along one axis containing exponent ``alpha``."""
    q, r = divmod(alpha, di)
    if alpha > 0 and r == 0:
        return [q - 1, q]
    return [q]


def boxes_containing(m: Sequence[int], d: MPrimaryProfile) -> list[BoxCoord]:
    _check(m, d)
    axes = [box_candidates(a, di) for a, di in zip(m, d.d)]
    return [tuple(b) for b in itertools.product(*axes)]


def largest_box(m: Sequence[int], d: MPrimaryProfile) -> BoxCoord:
    _check(m, d)
    return tuple(a // di for a, di in zip(m, d.d))


def box_sum_range(m: Sequence[int], d: MPrimaryProfile) -> tuple[int, int]:
    """Smallest and largest coordinate sum over the boxes containing ``m``.

    Every value in between is attained, since the per-axis choices are
    independent and each offers one or two consecutive integers.
    """
    _check(m, d)
    hi = lo = 0
    for a, di in zip(m, d.d):
        c = box_candidates(a, di)
        lo += c[0]
        hi += c[-1]
    return lo, hi


def in_box(m: Sequence[int], a: BoxCoord, d: MPrimaryProfile) -> bool:
    _check(m, d)
    return all(ai * di <= e <= (ai + 1) * di for e, ai, di in zip(m, a, d.d))


def is_corner(m: Sequence[int], d: MPrimaryProfile) -> bool:
    _check(m, d)
    return all(a % di == 0 for a, di in zip(m, d.d))


def box_ideal(I: MonomialIdeal, a: BoxCoord, *, warn_if_bad: bool = False) -> MonomialIdeal:
    """``I_a = I**(|a|+1) : <mu**a>``.

    For good ideals this is the ideal generated by the minimal generators of
    ``I**(|a|+1)`` inside box ``a``, shifted back to the origin.  For bad
    ideals the colon is still returned but loses that reading.
    """
    d = mprimary_profile(I)
    if len(a) != I.n:
        raise DimensionMismatch(I.n, len(a))
    if warn_if_bad:
        from .goodness import classify

        if not classify(I).good:
            warnings.warn("box ideal of a bad ideal", stacklevel=2)
    l = sum(a) + 1
    return colon_monomial(ideal_power(I, l), d.corner(a))


def box_ideal_by_scan(I: MonomialIdeal, a: BoxCoord) -> MonomialIdeal:
    """``I_a`` read directly off the minimal generators of ``I**(|a|+1)`` in box ``a``."""
    d = mprimary_profile(I)
    shift = d.corner(a)
    gens = ideal_power(I, sum(a) + 1).gens
    inside = [tuple(e - s for e, s in zip(g, shift)) for g in gens if in_box(g, a, d)]
    return MonomialIdeal(inside, n=I.n)


@dataclass(frozen=True)
class Cone:
    """Points of N^n with some coordinates fixed and the rest bounded below.

    ``values[i]`` is the vertex coordinate; ``fixed[i]`` says whether that
    coordinate is pinned to it (an underlined entry) or free to grow.
    """

    values: tuple
    fixed: tuple

    @classmethod
    def free(cls, vertex: Sequence[int]) -> "Cone":
        return cls(tuple(vertex), (False,) * len(vertex))

    @property
    def vertex(self) -> tuple:
        return self.values

    @property
    def dimension(self) -> int:
        return sum(not f for f in self.fixed)

    def __contains__(self, p) -> bool:
        if len(p) != len(self.values):
            raise DimensionMismatch(len(self.values), len(p))
        return all(x == v if f else x >= v for x, v, f in zip(p, self.values, self.fixed))

    def __str__(self) -> str:
        parts = [f"_{v}" if f else str(v) for v, f in zip(self.values, self.fixed)]
        return "C(" + ",".join(parts) + ")"


def cone_family(a: Sequence[int]) -> list[Cone]:
    """All cones with vertex ``b <= a``: coordinate i is free iff ``b_i == a_i``.

    The family has ``prod(a_i + 1)`` members and partitions N^n.
    """
    axes = [range(ai + 1) for ai in a]
    out = []
    for b in itertools.product(*axes):
        out.append(Cone(tuple(b), tuple(bi < ai for bi, ai in zip(b, a))))
    return out


def decompose_cone(c: Cone, p: Sequence[int]) -> list[Cone]:
    """Split cone ``c`` along point ``p``.

    Exactly one piece has the dimension of ``c`` (with vertex ``p``); the
    others are strictly lower-dimensional.
    """
    p = tuple(p)
    if p not in c:
        raise ValueError(f"point {p} is not in cone {c}")
    free_idx = [i for i, f in enumerate(c.fixed) if not f]
    offsets = [p[i] - c.values[i] for i in free_idx]
    out = []
    for sub in cone_family(offsets):
        values = list(c.values)
        fixed = list(c.fixed)
        for j, i in enumerate(free_idx):
            values[i] = c.values[i] + sub.values[j]
            fixed[i] = sub.fixed[j]
        out.append(Cone(tuple(values), tuple(fixed)))
    return out
