"""Ratliff-Rush closure of good m-primary monomial ideals.

For a good ideal the closure is the intersection, over the axes i, of the
ideal where the chain ``I_{t e_i} = I**(t+1) : mu_i**t`` stops growing.
Each chain obeys ``I_{(t+1) e_i} = (I_{t e_i} * I) : mu_i``, so it can be
walked one step at a time, feeding only the monomials that were new in the
previous step, and it has stopped for good the first time a step adds
nothing.

:func:`oracle_closure` computes the defining union of ``I**(k+1) : I**k``
directly and serves as the independent check.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BadIdeal
from .goodness import classify
from .monomial import (
    MonomialIdeal,
    colon_ideal,
    contains,
    ideal_product,
    intersect,
    mprimary_profile,
    mu_ideal,
    non_corner_generators,
    powers,
)


@dataclass(frozen=True)
class AxisStabilization:
    """Result of walking the box chain along one axis.

    ``trace[t]`` is the set F_t of generators first appearing at step t;
    ``trace[0]`` is G(I) and the final entry is empty.  ``q`` is the first
    step after which nothing new appears.
    """

    axis: int
    q: int
    ideal: MonomialIdeal
    trace: tuple


@dataclass(frozen=True)
class QuotientStep:
    k: int
    quotient: MonomialIdeal

    @property
    def size(self) -> int:
        return len(self.quotient)


@dataclass(frozen=True)
class OracleReport:
    steps: tuple  # QuotientStep for k = 0..k_max
    union: MonomialIdeal
    stabilized: bool
    k_max: int
    window: int

    @property
    def counts(self) -> list[int]:
        return [s.size for s in self.steps]


def _gate(I: MonomialIdeal, check: bool) -> None:
    if check:
        report = classify(I)
        if not report.good:
            raise BadIdeal(report)


def _axis_step(f, m, i: int, d: tuple) -> tuple | None:
    """``f*m / gcd(f*m, mu_i)``, or None when another axis overflows its box."""
    p = [a + b for a, b in zip(f, m)]
    for j, e in enumerate(p):
        if j != i and e >= d[j]:
            return None
    # for good ideals p[i] >= d[i] always holds and this is exact division by mu_i
    p[i] = max(p[i] - d[i], 0)
    return tuple(p)


def axis_stabilize(I: MonomialIdeal, axis: int, *, check: bool = True) -> AxisStabilization:
    """Walk ``I_{0}, I_{e_i}, I_{2 e_i}, ...`` until it stops growing."""
    d = mprimary_profile(I)
    if not 0 <= axis < I.n:
        raise IndexError(f"axis {axis} out of range for {I.n} variables")
    _gate(I, check)
    extras = non_corner_generators(I, d)
    E = MonomialIdeal.zero(I.n)
    F = I.gens
    trace = [F]
    while F:
        E = MonomialIdeal._from_set(I.n, set(E.gens) | set(F))
        new = set()
        for f in F:
            for m in extras:
                a = _axis_step(f, m, axis, d.d)
                if a is not None and not contains(E, a):
                    new.add(a)
        F = MonomialIdeal._from_set(I.n, new).gens
        trace.append(F)
    q = len(trace) - 2
    return AxisStabilization(axis, q, E, tuple(trace))


def _map(fn, items, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def axis_ideals(I: MonomialIdeal, *, check: bool = True, threads: int = 1) -> list[AxisStabilization]:
    _gate(I, check)
    return _map(lambda i: axis_stabilize(I, i, check=False), range(I.n), threads)


def rr_closure(I: MonomialIdeal, *, check: bool = True, threads: int = 1) -> MonomialIdeal:
    """Ratliff-Rush closure of a good ideal as an intersection of axis ideals."""
    mprimary_profile(I)
    axes = axis_ideals(I, check=check, threads=threads)
    out = axes[0].ideal
    for a in axes[1:]:
        out = intersect(out, a.ideal)
    return out


def successive_quotient(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I**(k+1) : I**k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    P = powers(I, k + 1)
    return colon_ideal(P[k + 1], P[k])


def oracle_closure(I: MonomialIdeal, k_max: int = 15, window: int = 2, *, threads: int = 1) -> OracleReport:
    """Union of ``I**(k+1) : I**k`` for ``k <= k_max``.

    ``stabilized`` means the last ``window`` quotients coincide (and hence so
    does the union over them).  It is evidence, not proof: quotient chains
    can plateau and then grow again.
    """
    if k_max < 1 or window < 1:
        raise ValueError("k_max and window must be positive")
    P = powers(I, k_max + 1)
    quotients = _map(lambda k: colon_ideal(P[k + 1], P[k]), range(k_max + 1), threads)
    steps = tuple(QuotientStep(k, q) for k, q in enumerate(quotients))
    union = MonomialIdeal._from_set(I.n, {g for q in quotients for g in q.gens})
    tail = quotients[-window:]
    stabilized = len(tail) == window and all(q == tail[0] for q in tail)
    return OracleReport(steps, union, stabilized, k_max, window)


def is_ratliff_rush(I: MonomialIdeal, *, method: str = "auto", k_max: int = 15, window: int = 2) -> bool:
    """Whether ``I`` equals its Ratliff-Rush closure.

    ``method="formula"`` requires a good ideal; ``"oracle"`` uses the
    truncated quotient union; ``"auto"`` picks the formula when the ideal is
    good and the oracle otherwise.
    """
    mprimary_profile(I)
    if method == "auto":
        method = "formula" if classify(I).good else "oracle"
    if method == "formula":
        return rr_closure(I) == I
    if method == "oracle":
        return oracle_closure(I, k_max, window).union == I
    raise ValueError(f"unknown method {method!r}")


def is_very_good(I: MonomialIdeal) -> bool:
    """``I**2 == I * <mu_1, ..., mu_n>``."""
    d = mprimary_profile(I)
    return ideal_product(I, I) == ideal_product(I, mu_ideal(d))
