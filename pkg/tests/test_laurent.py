import pytest
from hypothesis import given, settings, strategies as st

from clusterfp.errors import NegativeExponentOnNonMonomial, NotDivisible
from clusterfp.laurent import LaurentPoly, lp_add, lp_div_exact, lp_mul, lp_substitute


def LP(nvars, terms):
    return LaurentPoly(nvars, terms)


@st.composite
def laurent_polys(draw, nvars=2, max_terms=6, exp_range=3, coeff_range=9):
    n = draw(st.integers(1, 1) if nvars is None else st.just(nvars))
    exps = st.tuples(*[st.integers(-exp_range, exp_range)] * n)
    terms = draw(
        st.dictionaries(
            exps, st.integers(-coeff_range, coeff_range).filter(bool), max_size=max_terms
        )
    )
    return LaurentPoly(n, terms)


def test_basic_arithmetic():
    x = LaurentPoly.variable(2, 0)
    y = LaurentPoly.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == LP(2, {(2, 0): 1, (0, 2): -1})
    assert (x + y) ** 2 == LP(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_cancellation_drops_terms():
    x = LaurentPoly.variable(1, 0)
    assert (x - x).is_zero()
    assert lp_add(x, -x).terms == {}


def test_constructor_merges_duplicates():
    p = LaurentPoly(1, [((1,), 2), ((1,), -2), ((0,), 5)])
    assert p.terms == {(0,): 5}


def test_division_by_unit_monomial():
    # Laurent ring: monomials with coefficient +-1 are units
    p = LP(1, {(1,): 1, (0,): 1})  # x + 1
    q = lp_div_exact(p, LaurentPoly.variable(1, 0))
    assert q == LP(1, {(0,): 1, (-1,): 1})


def test_division_known_quotient():
    x = LaurentPoly.variable(2, 0)
    y = LaurentPoly.variable(2, 1)
    num = (x + y) * (x * x + y)
    assert lp_div_exact(num, x + y) == x * x + y
    assert lp_div_exact(num, x * x + y) == x + y


def test_not_divisible_degree():
    x = LaurentPoly.variable(1, 0)
    one = LaurentPoly.one(1)
    with pytest.raises(NotDivisible):
        lp_div_exact(x + one, x - one)


def test_not_divisible_coefficient():
    x = LaurentPoly.variable(1, 0)
    two = LaurentPoly.constant(1, 2)
    assert lp_div_exact(LP(1, {(1,): 2, (0,): 2}), two) == x + LaurentPoly.one(1)
    with pytest.raises(NotDivisible):
        lp_div_exact(LP(1, {(1,): 2, (0,): 1}), two)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        lp_div_exact(LaurentPoly.one(1), LaurentPoly.zero(1))


@given(laurent_polys(), laurent_polys())
@settings(max_examples=300, deadline=None)
def test_product_division_round_trip(p, r):
    if r.is_zero():
        return
    assert lp_div_exact(lp_mul(p, r), r) == p


@given(laurent_polys(), laurent_polys(), laurent_polys())
@settings(max_examples=100, deadline=None)
def test_ring_axioms(p, q, r):
    assert lp_add(p, q) == lp_add(q, p)
    assert lp_mul(p, q) == lp_mul(q, p)
    assert lp_mul(p, lp_add(q, r)) == lp_add(lp_mul(p, q), lp_mul(p, r))
    assert lp_mul(lp_mul(p, q), r) == lp_mul(p, lp_mul(q, r))


def test_substitute_positive():
    p = LP(2, {(1, 1): 1, (0, 0): 1})  # xy + 1
    u = LaurentPoly.variable(2, 0)
    v = lp_add(LaurentPoly.variable(2, 1), LaurentPoly.one(2))
    got = lp_substitute(p, [u, v])
    assert got == LP(2, {(1, 1): 1, (1, 0): 1, (0, 0): 1})


def test_substitute_negative_needs_monomial():
    p = LP(1, {(-1,): 1})
    good = LaurentPoly.monomial(2, (1, -2))
    assert lp_substitute(p, [good]) == LP(2, {(-1, 2): 1})
    with pytest.raises(NegativeExponentOnNonMonomial):
        lp_substitute(p, [lp_add(LaurentPoly.variable(2, 0), LaurentPoly.one(2))])


def test_substitute_identity():
    p = LP(2, {(2, -1): 3, (0, 1): -4})
    imgs = [LaurentPoly.variable(2, i) for i in range(2)]
    assert lp_substitute(p, imgs) == p


def test_min_max_exponents():
    p = LP(2, {(2, -1): 1, (-3, 4): 2})
    assert p.min_exponents() == (-3, -1)
    assert p.max_exponents() == (2, 4)
    with pytest.raises(ValueError):
        LaurentPoly.zero(2).min_exponents()


if __name__ == "__main__":
    pytest.main([__file__])
