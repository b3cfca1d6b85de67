import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratliffrush.boxes import (
    Cone,
    box_ideal,
    box_ideal_by_scan,
    boxes_containing,
    cone_family,
    decompose_cone,
    in_box,
    is_corner,
    largest_box,
)
from ratliffrush.monomial import MonomialIdeal, MPrimaryProfile, ideal_power, mprimary_profile

EX41 = MonomialIdeal([(5, 0), (0, 5), (1, 4), (4, 1)])
D333 = MPrimaryProfile((3, 3, 3))


def brute_boxes(m, d):
    """Scan every box coordinate up to the obvious bound."""
    ranges = [range(a // di + 2) for a, di in zip(m, d.d)]
    return sorted(b for b in itertools.product(*ranges) if in_box(m, b, d))


def test_boxes_containing_examples():
    assert boxes_containing((2, 2, 2), D333) == [(0, 0, 0)]
    assert sorted(boxes_containing((3, 3, 0), D333)) == [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]
    assert boxes_containing((0, 0, 0), D333) == [(0, 0, 0)]


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3).flatmap(
    lambda d: st.tuples(st.just(MPrimaryProfile(tuple(d))), st.tuples(*[st.integers(0, 30)] * len(d)))
))
def test_boxes_containing_matches_scan(args):
    d, m = args
    boxes = boxes_containing(m, d)
    assert sorted(boxes) == brute_boxes(m, d)
    top = largest_box(m, d)
    assert top in boxes
    assert all(all(b <= t for b, t in zip(box, top)) for box in boxes)


def test_largest_box_examples():
    d = MPrimaryProfile((2, 3, 5, 7, 11))
    k = 4
    m = (2, 3, 5 * (k - 1), 7 * (k - 1), 0)
    assert largest_box(m, d) == (1, 1, k - 1, k - 1, 0)
    assert largest_box((1, 2, 4), MPrimaryProfile((2, 3, 5))) == (0, 0, 0)


def test_is_corner():
    assert is_corner((6, 3), MPrimaryProfile((3, 3)))
    assert not is_corner((5, 2, 2), D333)
    assert is_corner((0, 0, 0), D333)


def test_box_ideals_of_two_variable_example():
    assert box_ideal(EX41, (0, 0)) == EX41
    assert box_ideal(EX41, (1, 0)).gens == MonomialIdeal([(0, 5), (1, 4), (3, 2), (4, 1), (5, 0)]).gens
    assert box_ideal(EX41, (0, 1)) == MonomialIdeal([(0, 5), (1, 4), (2, 3), (4, 1), (5, 0)])
    full = MonomialIdeal([(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)])
    for a in [(1, 1), (2, 1), (1, 3), (2, 2)]:
        assert box_ideal(EX41, a) == full


def test_box_ideal_warns_on_bad_ideal():
    bad = MonomialIdeal([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
    with pytest.warns(UserWarning):
        box_ideal(bad, (1, 0, 0), warn_if_bad=True)


def test_cone_family_of_two_one():
    fam = cone_family((2, 1))
    assert [str(c) for c in fam] == ["C(_0,_0)", "C(_0,1)", "C(_1,_0)", "C(_1,1)", "C(2,_0)", "C(2,1)"]
    assert [c.dimension for c in fam].count(2) == 1


def test_cone_family_origin():
    assert cone_family((0, 0, 0)) == [Cone.free((0, 0, 0))]


@settings(max_examples=100)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_cone_family_is_disjoint_cover(a):
    fam = cone_family(a)
    assert len(fam) == math.prod(x + 1 for x in a)
    for p in itertools.product(*[range(x + 3) for x in a]):
        assert sum(p in c for c in fam) == 1


def test_decompose_cone_with_two_free_axes():
    c = Cone((5, 7, 4, 2, 3), (True, False, True, False, True))
    parts = decompose_cone(c, (5, 9, 4, 3, 3))
    assert [str(x) for x in parts] == [
        "C(_5,_7,_4,_2,_3)",
        "C(_5,_7,_4,3,_3)",
        "C(_5,_8,_4,_2,_3)",
        "C(_5,_8,_4,3,_3)",
        "C(_5,9,_4,_2,_3)",
        "C(_5,9,_4,3,_3)",
    ]


def test_decompose_at_own_vertex_is_trivial():
    c = Cone((1, 2), (False, True))
    assert decompose_cone(c, (1, 2)) == [c]
    with pytest.raises(ValueError):
        decompose_cone(c, (0, 2))


@settings(max_examples=100)
@given(st.data())
def test_decompose_cone_is_disjoint_cover(data):
    n = data.draw(st.integers(1, 3))
    values = data.draw(st.tuples(*[st.integers(0, 3)] * n))
    fixed = data.draw(st.tuples(*[st.booleans()] * n))
    c = Cone(values, fixed)
    p = tuple(v if f else v + data.draw(st.integers(0, 3)) for v, f in zip(values, fixed))
    parts = decompose_cone(c, p)
    top = [x for x in parts if x.dimension == c.dimension]
    assert len(top) == 1 and top[0].vertex == p
    assert all(x.dimension < c.dimension for x in parts if x is not top[0])
    grid = itertools.product(*[[v] if f else range(v, v + 6) for v, f in zip(values, fixed)])
    for q in grid:
        assert sum(q in x for x in parts) == 1


# structural laws on good ideals; the good corpus lives in conftest

def test_box_ideal_monotone(good_corpus):
    for I in good_corpus[:40]:
        boxes = [a for a in itertools.product(range(3), repeat=I.n) if sum(a) <= 3]
        ideals = {a: box_ideal(I, a) for a in boxes}
        for a, b in itertools.product(boxes, boxes):
            if all(x <= y for x, y in zip(a, b)):
                assert ideals[a] <= ideals[b]


def test_corners_are_minimal_generators(good_corpus):
    for I in good_corpus[:40]:
        d = mprimary_profile(I)
        for l in range(1, 5):
            G = set(ideal_power(I, l).gens)
            for k in itertools.product(range(l + 1), repeat=I.n):
                if sum(k) == l:
                    assert d.corner(k) in G


def test_mus_generate_every_box_ideal(good_corpus):
    for I in good_corpus[:40]:
        d = mprimary_profile(I)
        for a in itertools.product(range(3), repeat=I.n):
            if sum(a) <= 3:
                assert set(d.mus()) <= set(box_ideal(I, a).gens)


def test_box_ideal_colon_matches_scan(good_corpus):
    for I in good_corpus[:40]:
        for a in itertools.product(range(3), repeat=I.n):
            if sum(a) <= 3:
                assert box_ideal(I, a) == box_ideal_by_scan(I, a)


def test_box_decomposition_of_powers(good_corpus):
    from ratliffrush.monomial import ideal_sum

    for I in good_corpus[:40]:
        d = mprimary_profile(I)
        for t in range(1, 5):
            total = MonomialIdeal.zero(I.n)
            for tp in itertools.product(range(t), repeat=I.n):
                if sum(tp) != t - 1:
                    continue
                shift = d.corner(tp)
                J = box_ideal(I, tp)
                total = ideal_sum(total, MonomialIdeal([tuple(a + b for a, b in zip(g, shift)) for g in J.gens], n=I.n))
            assert total == ideal_power(I, t)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3).flatmap(
    lambda d: st.tuples(st.just(MPrimaryProfile(tuple(d))), st.tuples(*[st.integers(0, 60)] * len(d)), st.integers(1, 4))
))
def test_nested_boxes_under_scaled_profile(args):
    d, m, k = args
    small = largest_box(m, d)
    big = largest_box(m, d.scaled(k))
    assert big == tuple(a // k for a in small)
    # the old box sits inside the new one
    for a in boxes_containing(m, d):
        b = tuple(x // k for x in a)
        assert in_box(m, b, d.scaled(k))
