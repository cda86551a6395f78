import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorcob.gf2poly import NotDivisible, PolyContext, divide_by_linear_form
from milnorcob.linratfun import (
    NotPolynomial,
    RationalFunction,
    den_poly,
    lagrange_ii,
    lagrange_p,
    lagrange_q,
    parse_rational,
    rat_add,
    rat_is_zero,
    rat_sum,
    rat_to_polynomial,
)
from oracles import gf2, ii_oracle, is_zero, q_oracle, q_threshold

CTX = PolyContext(3)
Y1, Y2, Y3 = (CTX.var(i) for i in (1, 2, 3))
M1, M2, M3 = 1, 2, 4


def frac(num, *forms):
    return RationalFunction(num, list(forms))


def test_add_examples():
    f = frac(CTX.one(), M1 | M2)
    assert rat_is_zero(rat_add(f, f))
    s = rat_add(frac(CTX.one(), M1), frac(CTX.one(), M2))
    assert s.num == Y1 + Y2
    assert s.den == ((M1, 1), (M2, 1))
    three = rat_sum(
        [
            frac(CTX.one(), M1 | M2, M1 | M3),
            frac(CTX.one(), M1 | M2, M2 | M3),
            frac(CTX.one(), M1 | M3, M2 | M3),
        ]
    )
    assert rat_is_zero(three)


def test_is_zero_examples():
    assert rat_is_zero(RationalFunction.zero(CTX))
    assert not rat_is_zero(frac(CTX.one(), M1))
    assert rat_is_zero(lagrange_p(3))


def test_to_polynomial_examples():
    f = frac(Y1 ** 2 + Y2 ** 2, M1 | M2)
    assert rat_to_polynomial(f) == Y1 + Y2
    with pytest.raises(NotPolynomial):
        rat_to_polynomial(frac(CTX.one(), M1))
    g = RationalFunction(Y1 ** 2 * Y2 + Y1 * Y2 ** 2, [M1, M2], reduce=False)
    assert rat_to_polynomial(g) == Y1 + Y2


def test_reduction_invariant():
    f = frac(Y1 ** 2 + Y2 ** 2, M1 | M2)
    assert f.den == () and f.num == Y1 + Y2
    g = frac(Y1 * Y2, M1, M1 | M2)
    assert g.den == ((M1 | M2, 1),)


def test_text_round_trip():
    f = frac(Y1 + Y3, M1, M2 | M3, M2 | M3)
    text = str(f)
    assert text == "y1 + y3 / (y1)(y2+y3)(y2+y3)"
    back = parse_rational(CTX, str(f.num), f.denominator_strings())
    assert back == f


def test_lagrange_p_examples():
    for n in (2, 3, 6):
        assert rat_is_zero(lagrange_p(n))
    with pytest.raises(ValueError):
        lagrange_p(1)


def test_lagrange_ii_examples():
    for n in (1, 2, 5):
        assert rat_is_zero(lagrange_ii(n))
    with pytest.raises(ValueError):
        lagrange_ii(0)


def test_lagrange_q_examples():
    assert lagrange_q(2, 1) == 1
    assert rat_is_zero(lagrange_q(2, 0))
    assert lagrange_q(3, 2) == 1
    with pytest.raises(ValueError):
        lagrange_q(1, 0)


# -- expansion oracle -------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 7))
def test_q_threshold_from_oracle(n):
    """The oracle puts the threshold at k = n-1, not k = n."""
    ctx = PolyContext(n)
    total = sum((ctx.var(i) for i in range(1, n + 1)), ctx.zero())
    assert q_threshold(n) == n - 1
    for k in range(0, n + 1):
        (num, den), y = q_oracle(n, k)
        if k < n - 1:
            target = 0
        elif k == n - 1:
            target = 1
        else:
            target = sum(y)
        assert is_zero(num - gf2(target, y) * den), (n, k)
        if k == n:
            assert not is_zero(num - den)

        value = lagrange_q(n, k)
        if k < n - 1:
            assert rat_is_zero(value)
        elif k == n - 1:
            assert value == 1
        else:
            assert value == total


@pytest.mark.parametrize("n", range(2, 7))
def test_p_and_ii_zero_by_oracle(n):
    (num, _), _ = q_oracle(n, 0)
    assert is_zero(num)
    (num, _), _ = ii_oracle(n)
    assert is_zero(num)
    assert rat_is_zero(lagrange_p(n)) and rat_is_zero(lagrange_ii(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_p_recursion(n):
    ctx = PolyContext(n + 1)
    edge = 1 | (1 << n)
    full, lo, hi = range(1, n + 2), range(1, n + 1), range(2, n + 2)
    lhs = lagrange_p(n + 1, full, ctx) * ctx.linear_form(edge)
    assert lhs == lagrange_p(n, lo, ctx) + lagrange_p(n, hi, ctx)


@pytest.mark.parametrize("n", range(2, 7))
def test_q_recursion(n):
    ctx = PolyContext(n + 1)
    edge = 1 | (1 << n)
    full, lo, hi = range(1, n + 2), range(1, n + 1), range(2, n + 2)
    for k in range(0, n + 2):
        lhs = lagrange_q(n + 1, k, full, ctx) * ctx.linear_form(edge)
        assert lhs == lagrange_q(n, k, lo, ctx) + lagrange_q(n, k, hi, ctx), k


# -- properties -----------------------------------------------------------

masks = st.integers(1, 7)
nums = st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=6).map(CTX.from_exponents)
rats = st.builds(
    lambda num, forms: RationalFunction(num, forms),
    nums,
    st.lists(masks, max_size=3),
)


@settings(max_examples=60, deadline=None)
@given(rats, rats, rats)
def test_add_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert rat_is_zero(f + f)


@settings(max_examples=60, deadline=None)
@given(nums, st.lists(masks, max_size=4))
def test_reduction_preserves_value(num, forms):
    raw = RationalFunction(num, forms, reduce=False)
    red = RationalFunction(num, forms)
    # cross-multiplication against the unreduced form
    lhs = raw.num * den_poly(CTX, red.den)
    rhs = red.num * den_poly(CTX, raw.den)
    assert lhs == rhs
    for mask, _ in red.den:
        with pytest.raises(NotDivisible):
            divide_by_linear_form(red.num, mask)
