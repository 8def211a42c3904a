from __future__ import annotations

import math
import random

import pytest

from colonlab.errors import ContextMismatch, NotMPrimary
from colonlab.ideal import (Ideal, certify_m_primary, colength, colon, colon_by_element_elimination,
                            ideal_combine, intersect, is_m_primary, minimal_generators, mu, ord_ideal,
                            power_of_maximal, saturate)
from colonlab.oracle import oracle_colon, oracle_intersection
from colonlab.parsing import parse_polynomial
from colonlab.polynomial import random_linear_form
from colonlab.randideals import random_m_primary, random_polynomial

from conftest import R2, R3, ideal, m


def P(text, ring=R2):
    return parse_polynomial(text, ring)


def test_generators_must_lie_in_m():
    with pytest.raises(ValueError):
        Ideal(R2, [P("1 + x")])
    assert Ideal(R2, [P("3")]).is_unit()
    with pytest.raises(ContextMismatch):
        ideal("x") + ideal("x", ring=R3)


def test_combine_examples():
    assert ideal_combine("sum", ideal("x^2"), ideal("y^2")) == ideal("x^2", "y^2")
    assert ideal_combine("product", ideal("x"), ideal("y")) == ideal("x*y")
    assert ideal_combine("power", m(), n=2) == ideal("x^2", "x*y", "y^2")
    assert ideal_combine("power", m(), n=0).is_unit()
    assert power_of_maximal(R2, 3) == m() ** 3


def test_intersection_examples():
    assert intersect(ideal("x"), ideal("y")) == ideal("x*y")
    assert intersect(ideal("x^2", "y^2"), m() ** 2) == ideal("x^2", "y^2")
    assert intersect(ideal("x^2"), ideal("y^2")) == ideal("x^2*y^2")
    assert intersect(ideal("x"), Ideal.zero(R2)).is_zero()
    assert intersect(ideal("x"), Ideal.unit(R2)) == ideal("x")


def test_colon_examples():
    assert colon(ideal("x^2", "x*y"), P("x")) == ideal("x", "y")
    assert colon(ideal("x^2", "x*y"), m()) == ideal("x")
    assert colon(ideal("x^2", "y^2"), P("x")) == ideal("x", "y^2")
    a = ideal("x^2", "y^3")
    assert colon(a, Ideal.unit(R2)) == a
    assert colon(m(), P("x")).is_unit()
    with pytest.raises(ValueError):
        colon(a, Ideal.zero(R2))


def test_saturation_examples():
    assert saturate(ideal("x^2", "x*y"), ideal("x")).is_unit()
    assert saturate(ideal("x*y"), ideal("x")) == ideal("y")
    assert saturate(ideal("x^2"), ideal("x")).is_unit()


def test_certification_examples():
    cert = certify_m_primary(ideal("x^2", "y^3"))
    assert (cert.colength, cert.power_bound) == (6, 4)
    with pytest.raises(NotMPrimary):
        certify_m_primary(ideal("x"))
    with pytest.raises(NotMPrimary):
        certify_m_primary(ideal("x^2 - x", "y"))
    assert colength(ideal("x")) == math.inf
    assert not is_m_primary(Ideal.unit(R2))


def test_power_bound_is_minimal_and_bounded_by_colength():
    rng = random.Random(3)
    for _ in range(40):
        a = random_m_primary(R2, rng)
        cert = certify_m_primary(a)
        assert cert.power_bound <= cert.colength
        assert (m() ** cert.power_bound) <= a
        assert not (m() ** (cert.power_bound - 1)) <= a


@pytest.mark.parametrize("t", range(1, 9))
def test_powers_of_m_certify(t):
    cert = certify_m_primary(m() ** t)
    assert cert.colength == t * (t + 1) // 2
    assert cert.power_bound == t
    assert ord_ideal(m() ** t) == t


def test_ord_and_mu_examples():
    assert ord_ideal(ideal("x^3 + y^4", "x*y")) == 2
    assert ord_ideal(ideal("x^2", "y^2")) == 2
    assert mu(m() ** 2) == 3
    assert mu(ideal("x^2", "x*y", "y^3")) == 3
    assert mu(ideal("x^2", "y^2")) == 2
    assert colength(ideal("x^2", "x*y", "y^3")) == 4
    assert colength(m() * ideal("x^2", "x*y", "y^3")) == 7
    with pytest.raises(ValueError):
        ord_ideal(Ideal.zero(R2))
    with pytest.raises(NotMPrimary):
        mu(ideal("x"))


def _random_pairs(count, seed, ring=R2):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_m_primary(ring, rng), random_m_primary(ring, rng), rng


def test_containments():
    for a, b, rng in _random_pairs(500, 7):
        ab = colon(a, b)
        assert a <= ab
        assert (ab * b) <= a
        inter = intersect(a, b)
        assert inter <= a and inter <= b
        s = a + b
        assert a <= s and b <= s


def test_containments_non_zero_dimensional():
    rng = random.Random(8)
    for _ in range(40):
        f = random_polynomial(R2, rng, 1, 2, 2)
        a = Ideal(R2, [f * random_polynomial(R2, rng, 1, 2, 2), f * P("x^2")])
        b = Ideal(R2, [random_polynomial(R2, rng, 1, 2, 2)])
        ab = colon(a, b)
        assert a <= ab and (ab * b) <= a
        inter = intersect(a, b)
        assert inter <= a and inter <= b


def test_colon_intersection_duality():
    rng = random.Random(9)
    for _ in range(60):
        a = random_m_primary(R2, rng)
        g = random_polynomial(R2, rng, 1, 3, 2)
        q = colon(a, g)
        assert q == colon_by_element_elimination(a, g)
        assert q * g == intersect(a, Ideal(R2, [g]))


def test_ord_is_additive_in_two_vars():
    # ord is a valuation on a two-dimensional regular local ring (a sanity check, not a theorem used here)
    for a, b, _ in _random_pairs(200, 10):
        assert ord_ideal(a * b) == ord_ideal(a) + ord_ideal(b)


def test_mu_matches_greedy_generators():
    rng = random.Random(12)
    for _ in range(200):
        a = random_m_primary(R2, rng)
        assert mu(a) == len(minimal_generators(a))


def test_colon_and_intersection_match_oracle_three_vars():
    rng = random.Random(13)
    for _ in range(6):
        a = random_m_primary(R3, rng, order=rng.choice((1, 2)), spread=2, extra=(1, 2), terms=2)
        b = random_m_primary(R3, rng, order=1, spread=2, extra=(1, 2), terms=2)
        x = random_linear_form(R3, rng)
        assert colon(a, x) == oracle_colon(a, x)
        assert intersect(a, b) == oracle_intersection(a, b)


def test_str_and_hash():
    a = ideal("x^2", "x*y")
    assert str(a) == "ideal(x*y, x^2)"
    assert str(Ideal.zero(R2)) == "ideal(0)"
    assert str(Ideal.unit(R2)) == "ideal(1)"
    assert hash(a) == hash(ideal("x*y", "x^2 + x*y"))
    assert P("x^2 + x*y") in a
