from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colonlab.errors import ResourceError
from colonlab.ring import GREVLEX, LEX, MAX_EXPONENT, Monomial, MonomialOrder, PrimeField, RingContext


def test_prime_field_rejects_composites():
    for bad in (0, 1, 4, 32004, 561):
        with pytest.raises(ValueError):
            PrimeField(bad)
    assert PrimeField(32003).p == 32003
    assert PrimeField(2).p == 2


def test_field_normalize_and_inverse():
    k = PrimeField(7)
    assert k.normalize(-1) == 6
    assert all(a * k.inv(a) % 7 == 1 for a in range(1, 7))
    with pytest.raises(ZeroDivisionError):
        k.inv(0)


def test_ring_validation():
    with pytest.raises(ValueError):
        RingContext.make("x,x")
    with pytest.raises(ValueError):
        RingContext.make("x,,y")
    with pytest.raises(ValueError):
        RingContext.make("x", order=MonomialOrder("block", 1))
    with pytest.raises(ValueError):
        MonomialOrder("deglex")


def test_monomial_total_degree():
    assert Monomial((2, 0, 3)).total_degree == 5
    assert Monomial((1, 1)).divides(Monomial((2, 1)))
    assert not Monomial((1, 2)).divides(Monomial((2, 1)))


def test_grevlex_small_cases():
    r = RingContext.make("x,y,z")
    e = r.encode
    # degree first, then the smallest last exponent wins
    assert e((0, 0, 2)) > e((1, 0, 0))
    assert e((2, 0, 0)) > e((1, 1, 0)) > e((0, 2, 0)) > e((1, 0, 1)) > e((0, 1, 1)) > e((0, 0, 2))
    assert e((1, 0, 1)) < e((0, 2, 0))


def test_lex_small_cases():
    r = RingContext.make("x,y", order=LEX)
    assert r.encode((1, 0)) > r.encode((0, 5))
    assert r.encode((1, 1)) > r.encode((1, 0))


def test_block_order_eliminates_first_block():
    r = RingContext.make("t,x,y", order=MonomialOrder("block", 1))
    assert r.encode((1, 0, 0)) > r.encode((0, 7, 7))
    assert r.encode((1, 1, 0)) > r.encode((1, 0, 1)) > r.encode((1, 0, 0))


exps3 = st.tuples(*[st.integers(0, 20)] * 3)
orders = st.sampled_from([GREVLEX, LEX, MonomialOrder("block", 1), MonomialOrder("block", 2)])


@given(orders, exps3, exps3, exps3)
def test_orders_are_multiplicative_total_well_orders(order, a, b, c):
    r = RingContext.make("x,y,z", order=order)
    ka, kb, kc = r.encode(a), r.encode(b), r.encode(c)
    assert (ka == kb) == (a == b)
    if ka < kb:
        assert r.encode(tuple(i + j for i, j in zip(a, c))) < r.encode(tuple(i + j for i, j in zip(b, c)))
    assert r.encode((0, 0, 0)) <= ka
    # keys are additive
    assert r.encode(tuple(i + j for i, j in zip(a, b))) == ka + kb


@given(orders, exps3, exps3)
def test_encode_decode_and_divisibility(order, a, b):
    r = RingContext.make("x,y,z", order=order)
    ka, kb = r.encode(a), r.encode(b)
    assert r.decode(ka) == a
    assert r.divides(ka, kb) == all(i <= j for i, j in zip(a, b))
    assert r.decode(r.lcm(ka, kb)) == tuple(max(i, j) for i, j in zip(a, b))
    assert r.degree(ka) == sum(a)


def test_exponent_limit():
    r = RingContext.make("x,y")
    with pytest.raises(ResourceError):
        r.encode((MAX_EXPONENT + 1, 0))


def test_monomials_of_degree_counts():
    r = RingContext.make("x,y,z")
    assert len(r.monomials_of_degree(4)) == 15
    assert r.monomial_str(r.encode((2, 0, 1))) == "x^2*z"
    assert r.monomial_str(r.encode((0, 0, 0))) == "1"
