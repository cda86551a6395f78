import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorcob.milnor import (
    FixedPoint,
    InvalidAction,
    MilnorAction,
    eta_closed_formula,
    eta_fixed_point_sum,
    fixed_points,
    projective_class,
    tangential_rep,
    validate_pullback_action,
)
from milnorcob.repring import GroupHom, RepElement, char, parse_element, pullback


def mono(rank, *supports):
    return RepElement.monomial(rank, [char(s) for s in supports])


def test_fixed_points_examples():
    assert set(fixed_points(1, 2)) == {(0, 1), (0, 2), (1, 0), (1, 2)}
    assert set(fixed_points(1, 1)) == {(0, 1), (1, 0)}
    assert len(fixed_points(2, 3)) == 9
    with pytest.raises(ValueError):
        fixed_points(3, 2)
    with pytest.raises(ValueError):
        fixed_points(0, 2)


def test_tangential_rep_examples():
    assert tangential_rep(1, 2, FixedPoint(0, 2)) == mono(2, [1], [1, 2])
    assert tangential_rep(1, 2, FixedPoint(1, 0)) == mono(2, [1], [2])
    t = tangential_rep(2, 3, FixedPoint(1, 2))
    assert t == mono(3, [1], [2], [2, 3], [1, 2])
    assert t.degree() == 4
    with pytest.raises(ValueError):
        tangential_rep(1, 2, FixedPoint(1, 1))


@pytest.mark.parametrize("m,n", [(m, n) for n in range(1, 7) for m in range(1, n + 1)])
def test_tangential_degree(m, n):
    for fp in fixed_points(m, n):
        assert tangential_rep(m, n, fp).degree() == m + n - 1


def test_eta_examples():
    assert not eta_fixed_point_sum(MilnorAction(1, 2))
    e13 = eta_fixed_point_sum(MilnorAction(1, 3))
    assert len(e13) == 6
    assert mono(3, [1], [2], [3]).monomials <= e13.monomials
    assert eta_fixed_point_sum(MilnorAction(1, 3, GroupHom.identity(3))) == e13
    expected = parse_element(
        "Y{1}Y{2}Y{3} + Y{1}Y{2}Y{2,3} + Y{1}Y{3}Y{2,3} + Y{1}Y{1,2}Y{1,3}"
        " + Y{1}Y{1,2}Y{2,3} + Y{1}Y{1,3}Y{2,3}",
        3,
    )
    assert e13 == expected


def test_closed_formula_examples():
    assert not eta_closed_formula(1, 2)
    assert eta_closed_formula(1, 3) == eta_fixed_point_sum(MilnorAction(1, 3))
    e = eta_closed_formula(2, 4)
    assert e and e.degree() == 5


@pytest.mark.parametrize("m,n", [(m, n) for n in range(1, 7) for m in range(1, n + 1)])
def test_closed_formula_matches_fixed_points(m, n):
    assert eta_closed_formula(m, n) == eta_fixed_point_sum(MilnorAction(m, n))


@pytest.mark.parametrize("m,n", [(m, n) for n in range(3, 7) for m in range(1, n)])
def test_nontrivial(m, n):
    assert eta_fixed_point_sum(MilnorAction(m, n))


def test_validate_pullback_action():
    validate_pullback_action(GroupHom.from_subsets([[1], [2], [1, 2]]))
    with pytest.raises(InvalidAction, match="S_1 and S_2"):
        validate_pullback_action(GroupHom.from_subsets([[1], [1], [2]]))
    with pytest.raises(InvalidAction, match="S_2 is empty"):
        validate_pullback_action(GroupHom.from_subsets([[1], [], [2]]))
    with pytest.raises(InvalidAction):
        MilnorAction(1, 3, GroupHom.from_subsets([[1], [1], [2]]))


def test_projective_class_examples():
    assert projective_class(2) == mono(2, [1], [2]) + mono(2, [1], [1, 2]) + mono(2, [2], [1, 2])
    assert not projective_class(1)
    for k in range(1, 6):
        assert projective_class(k).degrees() <= {k}
    with pytest.raises(ValueError):
        projective_class(0)


def distinct_subsets(n, rank):
    return st.lists(st.integers(1, 2 ** rank - 1), min_size=n, max_size=n, unique=True)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_naturality(data):
    n = data.draw(st.integers(2, 5))
    m = data.draw(st.integers(1, n))
    rank = data.draw(st.integers(2, 4))
    if 2 ** rank - 1 < n:
        rank = n
    h = GroupHom(tuple(data.draw(distinct_subsets(n, rank))), rank)
    assert pullback(eta_closed_formula(m, n), h) == eta_fixed_point_sum(MilnorAction(m, n, h))
