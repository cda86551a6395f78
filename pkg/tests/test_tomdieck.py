from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorcob.gf2poly import PolyContext
from milnorcob.linratfun import RationalFunction, make_denominator
from milnorcob.milnor import MilnorAction, eta_fixed_point_sum, projective_class
from milnorcob.repring import RepElement, char, make_monomial
from milnorcob.tomdieck import BMultiIndex, b_coefficient, b_indices, check_integrality, placements
from oracles import b_coefficient_oracle, rational_to_sympy, same_fraction, ys


def test_bmultiindex():
    B = BMultiIndex.of(4, 1, 1, 0)
    assert B.weight == 6 and B.size == 3
    assert str(B) == "b1^2*b4"
    assert BMultiIndex().weight == 0


def test_placements_count():
    # d slots, parts {3, 1, 1}: d! / ((d-3)! 2!)
    for d in range(3, 7):
        got = list(placements([3, 1, 1], d))
        assert len(got) == len(set(got)) == factorial(d) // (factorial(d - 3) * 2)
    assert list(placements([], 2)) == [(0, 0)]


def test_b_indices_enumeration():
    got = b_indices(4, 2)
    # partitions of 0..4 into at most two parts
    assert [str(b) for b in got] == ["1", "b1", "b2", "b1^2", "b3", "b1*b2", "b4", "b1*b3", "b2^2"]


def test_examples():
    y1 = RepElement.generator(1, [1])
    assert b_coefficient(y1, BMultiIndex.of(1)) == 1
    ctx1 = PolyContext(1)
    assert b_coefficient(y1, BMultiIndex()) == RationalFunction(ctx1.one(), make_denominator([1]))

    e = RepElement.monomial(2, [char(1), char(2)])
    ctx = PolyContext(2)
    value = b_coefficient(e, BMultiIndex.of(2))
    expected = RationalFunction(ctx.var(1) ** 2 + ctx.var(2) ** 2, make_denominator([1, 2]))
    assert value == expected
    assert str(value) == "y1^2 + y2^2 / (y1)(y2)"

    assert not b_coefficient(projective_class(2), BMultiIndex())


def test_too_many_parts():
    e = RepElement.generator(2, [1])
    with pytest.raises(ValueError):
        b_coefficient(e, BMultiIndex.of(1, 1))


def test_integrality_examples():
    rep = check_integrality(projective_class(2), 2, 5)
    assert rep.ok and rep.entries
    rep = check_integrality(eta_fixed_point_sum(MilnorAction(1, 3)), 3, 8)
    assert rep.ok
    bare = RepElement.monomial(2, [char(1), char(2)])
    rep = check_integrality(bare, 2, 3)
    assert not rep.ok
    first = rep.failures()[0]
    assert first.B == BMultiIndex() and first.expected == "zero"
    assert str(first.value) == "1 / (y1)(y2)"


RANK = 3
chars = st.integers(1, 2 ** RANK - 1)


def homogeneous(d):
    mono = st.lists(chars, min_size=d, max_size=d).map(lambda cs: make_monomial(cs, RANK))
    return st.lists(mono, min_size=1, max_size=4).map(lambda ms: RepElement(RANK, ms))


bs = st.lists(st.integers(1, 5), max_size=2).map(lambda ps: BMultiIndex.of(*ps))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_homogeneity(data):
    d = data.draw(st.integers(2, 3))
    e = data.draw(homogeneous(d))
    B = data.draw(bs)
    value = b_coefficient(e, B)
    if value:
        assert value.is_homogeneous()
        assert value.degree() == B.weight - d


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_linearity(data):
    d = data.draw(st.integers(1, 3))
    a, b = data.draw(homogeneous(d)), data.draw(homogeneous(d))
    B = data.draw(bs.filter(lambda B: B.size <= d))
    ctx = PolyContext(RANK)
    assert b_coefficient(a + b, B, ctx) == b_coefficient(a, B, ctx) + b_coefficient(b, B, ctx)


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_random_elements_match_oracle(data):
    d = data.draw(st.integers(1, 3))
    e = data.draw(homogeneous(d))
    B = data.draw(bs.filter(lambda B: B.size <= d))
    y = ys(RANK)
    on, od = b_coefficient_oracle(e, B.parts(), RANK)
    mn, md = rational_to_sympy(b_coefficient(e, B), y)
    assert same_fraction(mn, md, on, od, y)


def test_oracle_agrees_when_coefficient_is_polynomial():
    # sigma^2 / sigma = y1 + y2: the oracle's cross-multiplied difference cancels completely
    e = RepElement(RANK, [make_monomial([3], RANK)])
    B = BMultiIndex.of(2)
    y = ys(RANK)
    on, od = b_coefficient_oracle(e, B.parts(), RANK)
    mn, md = rational_to_sympy(b_coefficient(e, B), y)
    assert same_fraction(mn, md, on, od, y)


@pytest.mark.parametrize("k", range(5, 13))
def test_decomposable_coefficients_vanish(k):
    e = projective_class(2) * projective_class(2)
    assert e.degree() == 4
    assert not b_coefficient(e, BMultiIndex.of(k))
    assert not b_coefficient(e, BMultiIndex.of(k - 1, 1))


def test_split_coefficient_counts():
    # b_{k-1} b_1 over a single Y_S of degree 2: two placements, both sigma^k / sigma^2
    e = RepElement.monomial(2, [char(1), char(1)])
    value = b_coefficient(e, BMultiIndex.of(3, 1))
    assert not value  # the two placements coincide and cancel mod 2
