"""Monomials as exponent vectors and monomial ideals as minimal generating sets.

A monomial in n variables is a plain ``tuple`` of n nonnegative ints.  A
:class:`MonomialIdeal` stores its unique minimal generating set, sorted by
total degree and then lexicographically, so two ideals are equal exactly when
their generator tuples are equal.

The inner loops (reduction, products, colons, intersections) run on int64
numpy arrays once the inputs are large enough to amortise the conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, NotMPrimary

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**63 - 1

# below this many candidates the pure-python paths beat numpy's call overhead
_SMALL = 48
# cap on the size of a broadcast comparison block (elements)
_BLOCK = 1 << 21


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(len(a), len(b))


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` divides ``b``, i.e. ``a <= b`` coordinatewise."""
    _check_dims(a, b)
    return _divides(a, b)


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    """Product of two monomials; raises OverflowError past 64-bit exponents."""
    _check_dims(a, b)
    out = tuple(x + y for x, y in zip(a, b))
    if out and max(out) > MAX_EXPONENT:
        raise OverflowError("exponent exceeds 64-bit range")
    return out


def lcm_gcd_mul(a: Sequence[int], b: Sequence[int]) -> tuple[Monomial, Monomial, Monomial]:
    return lcm(a, b), gcd(a, b), mul(a, b)


def power(m: Sequence[int], k: int) -> Monomial:
    out = tuple(k * e for e in m)
    if out and max(out) > MAX_EXPONENT:
        raise OverflowError("exponent exceeds 64-bit range")
    return out


def degree(m: Sequence[int]) -> int:
    return sum(m)


def unit(n: int) -> Monomial:
    return (0,) * n


def pure_power(n: int, i: int, d: int) -> Monomial:
    """The monomial x_i^d in n variables (0-based index)."""
    e = [0] * n
    e[i] = d
    return tuple(e)


def _sort_key(m: Monomial):
    return (sum(m), m)


def _as_monomial(m, n: int | None) -> Monomial:
    t = tuple(int(e) for e in m)
    if n is not None and len(t) != n:
        raise DimensionMismatch(n, len(t))
    for e in t:
        if e < 0:
            raise ValueError(f"negative exponent in {t}")
        if e > MAX_EXPONENT:
            raise OverflowError("exponent exceeds 64-bit range")
    return t


def _to_array(ms: Sequence[Monomial], n: int) -> np.ndarray:
    if not ms:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(ms, dtype=np.int64).reshape(len(ms), n)


def _survivors(layer: np.ndarray, kept: np.ndarray) -> np.ndarray:
    """Boolean mask of rows in ``layer`` not divisible by any row of ``kept``."""
    if kept.shape[0] == 0:
        return np.ones(layer.shape[0], dtype=bool)
    n = layer.shape[1]
    step = max(1, _BLOCK // max(1, kept.shape[0] * n))
    out = np.empty(layer.shape[0], dtype=bool)
    for s in range(0, layer.shape[0], step):
        blk = layer[s : s + step]
        hit = np.all(kept[None, :, :] <= blk[:, None, :], axis=2).any(axis=1)
        out[s : s + step] = ~hit
    return out


def _minimalize(cands: set, n: int) -> tuple:
    """Minimal elements of a set of exponent tuples, in canonical order.

    Candidates are processed one total degree at a time: a monomial can only
    be divided by another of strictly smaller degree (duplicates are gone),
    so each layer is tested against the survivors of earlier layers.
    """
    if not cands:
        return ()
    ordered = sorted(cands, key=_sort_key)
    if len(ordered) <= _SMALL:
        kept: list = []
        for m in ordered:
            if not any(_divides(k, m) for k in kept):
                kept.append(m)
        return tuple(kept)
    kept_rows: list = []
    kept_arr = np.zeros((0, n), dtype=np.int64)
    i = 0
    while i < len(ordered):
        deg = sum(ordered[i])
        j = i
        while j < len(ordered) and sum(ordered[j]) == deg:
            j += 1
        layer = ordered[i:j]
        mask = _survivors(_to_array(layer, n), kept_arr)
        new = [m for m, keep in zip(layer, mask) if keep]
        if new:
            kept_rows.extend(new)
            kept_arr = np.concatenate([kept_arr, _to_array(new, n)])
        i = j
    return tuple(kept_rows)


def _rows_to_set(arr: np.ndarray) -> set:
    return set(map(tuple, arr.tolist()))


class MonomialIdeal:
    """A monomial ideal in ``n`` variables, held by its minimal generators.

    Construct from any iterable of exponent vectors; the generating set is
    reduced to the unique divisibility antichain.  An empty generator list is
    the zero ideal and ``[(0,)*n]`` is the unit ideal.  Instances are treated
    as immutable.
    """

    __slots__ = ("n", "gens", "_arr")

    def __init__(self, generators: Iterable = (), n: int | None = None):
        ms = [list(g) for g in generators]
        if n is None:
            if not ms:
                raise ValueError("n is required for the zero ideal")
            n = len(ms[0])
        if n < 1:
            raise ValueError("need at least one variable")
        cands = {_as_monomial(m, n) for m in ms}
        self.n = n
        self.gens = _minimalize(cands, n)
        self._arr = None

    @classmethod
    def _canonical(cls, n: int, gens: tuple) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj.n = n
        obj.gens = gens
        obj._arr = None
        return obj

    @classmethod
    def _from_set(cls, n: int, cands: set) -> "MonomialIdeal":
        return cls._canonical(n, _minimalize(cands, n))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._canonical(n, ())

    @classmethod
    def one(cls, n: int) -> "MonomialIdeal":
        return cls._canonical(n, (unit(n),))

    @property
    def array(self) -> np.ndarray:
        if self._arr is None:
            self._arr = _to_array(self.gens, self.n)
        return self._arr

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (unit(self.n),)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({list(self.gens)!r}, n={self.n})"

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subset(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_product(self, other)

    def __pow__(self, l: int) -> "MonomialIdeal":
        return ideal_power(self, l)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)


def _same_n(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatch(I.n, J.n)


def reduce_generators(ms: Iterable, n: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``ms``."""
    return MonomialIdeal(ms, n=n)


def contains(I: MonomialIdeal, m) -> bool:
    """Membership: some generator of ``I`` divides ``m``."""
    m = tuple(m)
    if len(m) != I.n:
        raise DimensionMismatch(I.n, len(m))
    if len(I.gens) <= _SMALL:
        return any(_divides(g, m) for g in I.gens)
    return bool(np.all(I.array <= np.asarray(m, dtype=np.int64), axis=1).any())


def _contains_rows(I: MonomialIdeal, rows: np.ndarray) -> np.ndarray:
    """Vectorised membership of each row of ``rows`` in ``I``."""
    if I.is_zero:
        return np.zeros(rows.shape[0], dtype=bool)
    return ~_survivors(rows, I.array)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_n(I, J)
    return MonomialIdeal._from_set(I.n, set(I.gens) | set(J.gens))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Product ideal, generated by all pairwise generator products."""
    _same_n(I, J)
    n = I.n
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(n)
    if len(I) * len(J) <= _SMALL:
        return MonomialIdeal._from_set(n, {mul(a, b) for a in I.gens for b in J.gens})
    if int(I.array.max()) + int(J.array.max()) > MAX_EXPONENT:
        raise OverflowError("exponent exceeds 64-bit range")
    prod = (I.array[:, None, :] + J.array[None, :, :]).reshape(-1, n)
    return MonomialIdeal._from_set(n, _rows_to_set(prod))


def ideal_power(I: MonomialIdeal, l: int) -> MonomialIdeal:
    """``I**l`` by repeated multiplication, reducing after every step."""
    if l < 0:
        raise ValueError("power must be nonnegative")
    out = MonomialIdeal.one(I.n)
    for _ in range(l):
        out = ideal_product(out, I)
    return out


def powers(I: MonomialIdeal, top: int) -> list[MonomialIdeal]:
    """``[I**0, I**1, ..., I**top]``, each computed from the previous one."""
    out = [MonomialIdeal.one(I.n)]
    for _ in range(top):
        out.append(ideal_product(out[-1], I))
    return out


def colon_monomial(I: MonomialIdeal, m) -> MonomialIdeal:
    """``I : <m>``, generated by ``g / gcd(g, m)`` over the generators of I."""
    m = tuple(m)
    if len(m) != I.n:
        raise DimensionMismatch(I.n, len(m))
    if len(I.gens) <= _SMALL:
        cands = {tuple(max(x - y, 0) for x, y in zip(g, m)) for g in I.gens}
        return MonomialIdeal._from_set(I.n, cands)
    shifted = np.maximum(I.array - np.asarray(m, dtype=np.int64), 0)
    return MonomialIdeal._from_set(I.n, _rows_to_set(shifted))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I ∩ J``, generated by pairwise lcms of generators.

    A generator of one ideal that already lies in the other is itself in the
    intersection and makes every lcm it takes part in redundant, so only the
    remaining generators are paired up.
    """
    _same_n(I, J)
    n = I.n
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(n)
    if len(I) * len(J) <= _SMALL:
        return MonomialIdeal._from_set(n, {lcm(a, b) for a in I.gens for b in J.gens})
    a_in = _contains_rows(J, I.array)
    b_in = _contains_rows(I, J.array)
    cands = set(map(tuple, I.array[a_in].tolist())) | set(map(tuple, J.array[b_in].tolist()))
    A = I.array[~a_in]
    B = J.array[~b_in]
    if A.shape[0] and B.shape[0]:
        step = max(1, _BLOCK // max(1, B.shape[0] * n))
        for s in range(0, A.shape[0], step):
            blk = np.maximum(A[s : s + step, None, :], B[None, :, :]).reshape(-1, n)
            cands |= _rows_to_set(blk)
    return MonomialIdeal._from_set(n, cands)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I : J`` as the intersection of ``I : <g>`` over generators g of J."""
    _same_n(I, J)
    if J.is_zero:
        raise ValueError("colon by the zero ideal")
    parts = sorted((colon_monomial(I, g) for g in J.gens), key=len)
    out = parts[0]
    for p in parts[1:]:
        if is_subset(out, p):
            continue
        out = intersect(out, p)
    return out


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_n(I, J)
    return I.gens == J.gens


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff every generator of ``I`` lies in ``J``."""
    _same_n(I, J)
    if I.is_zero:
        return True
    if len(I) * len(J) <= _SMALL:
        return all(any(_divides(h, g) for h in J.gens) for g in I.gens)
    return bool(_contains_rows(J, I.array).all())


@dataclass(frozen=True)
class MPrimaryProfile:
    """Exponents ``d`` with ``x_i**d[i]`` a minimal generator for every i."""

    d: tuple

    @property
    def n(self) -> int:
        return len(self.d)

    def mu(self, i: int) -> Monomial:
        return pure_power(len(self.d), i, self.d[i])

    def mus(self) -> list[Monomial]:
        return [self.mu(i) for i in range(len(self.d))]

    def corner(self, k: Sequence[int]) -> Monomial:
        """The corner ``mu_1**k_1 * ... * mu_n**k_n``."""
        return tuple(ki * di for ki, di in zip(k, self.d))

    def scaled(self, k: int) -> "MPrimaryProfile":
        return MPrimaryProfile(tuple(k * di for di in self.d))


def mprimary_profile(I: MonomialIdeal) -> MPrimaryProfile:
    """Read off the pure-power generators; raise NotMPrimary if one is missing."""
    d: list = [None] * I.n
    for g in I.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) == 1:
            d[support[0]] = g[support[0]]
    for i, di in enumerate(d):
        if di is None:
            raise NotMPrimary(i)
    return MPrimaryProfile(tuple(d))


def is_mprimary(I: MonomialIdeal) -> bool:
    try:
        mprimary_profile(I)
    except NotMPrimary:
        return False
    return True


def mu_ideal(d: MPrimaryProfile) -> MonomialIdeal:
    """``J = <mu_1, ..., mu_n>``."""
    return MonomialIdeal(d.mus(), n=d.n)


def non_corner_generators(I: MonomialIdeal, d: MPrimaryProfile) -> list[Monomial]:
    """Minimal generators other than the pure powers ``mu_i``."""
    mus = set(d.mus())
    return [g for g in I.gens if g not in mus]
