import random

from hypothesis import strategies as st

from ratliffrush.monomial import MonomialIdeal, pure_power


def monomials(n, max_exp=6):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def ideals(draw, n=None, max_exp=6, max_gens=6):
    n = draw(st.integers(1, 3)) if n is None else n
    gens = draw(st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens))
    return MonomialIdeal(gens, n=n)


@st.composite
def mprimary_ideals(draw, n=None, max_d=8, max_extra=3):
    n = draw(st.integers(2, 3)) if n is None else n
    d = draw(st.tuples(*[st.integers(1, max_d)] * n))
    extra = draw(
        st.lists(st.tuples(*[st.integers(0, di) for di in d]).filter(any), max_size=max_extra)
    )
    gens = [pure_power(n, i, d[i]) for i in range(n)] + extra
    I = MonomialIdeal(gens, n=n)
    return I


def random_mprimary(rng: random.Random, n, max_d=8, max_extra=3):
    """A random m-primary ideal whose pure powers survive reduction."""
    while True:
        d = [rng.randint(2, max_d) for _ in range(n)]
        k = rng.randint(1, max_extra)
        extra = [tuple(rng.randint(0, di - 1) for di in d) for _ in range(k)]
        gens = [pure_power(n, i, d[i]) for i in range(n)] + extra
        I = MonomialIdeal(gens, n=n)
        if all(pure_power(n, i, d[i]) in I.gens for i in range(n)) and len(I) > n:
            return I
