from __future__ import annotations

import numpy as np
import pytest

from colonlab import linalg
from colonlab.errors import OracleError
from colonlab.ideal import Ideal, MPrimaryCertificate
from colonlab.oracle import (TruncatedSpace, oracle_colon, oracle_intersection, oracle_membership,
                             oracle_membership_many)
from colonlab.parsing import parse_polynomial

from conftest import R2, ideal, m


def P(text):
    return parse_polynomial(text, R2)


def test_membership_examples():
    a = ideal("x^2", "y^3")
    assert oracle_membership(P("x^2"), a)
    assert not oracle_membership(P("x*y"), a)
    assert oracle_membership(P("y^3"), ideal("x^2", "x*y + y^2"))
    assert oracle_membership_many([P("x^3*y"), P("y^2"), P("0")], a) == [True, False, True]


def test_colon_examples():
    assert oracle_colon(ideal("x^2", "x*y", "y^4"), P("x")) == ideal("x", "y")
    assert oracle_colon(ideal("x^2", "y^2"), P("x")) == ideal("x", "y^2")
    a = ideal("x^2", "x*y + y^3", "y^5")
    assert oracle_colon(a, P("1")) == a
    assert oracle_colon(m(), P("x")).is_unit()
    with pytest.raises(OracleError):
        oracle_colon(a, P("0"))


def test_intersection_example():
    assert oracle_intersection(ideal("x^2", "y^2"), m() ** 2) == ideal("x^2", "y^2")
    assert oracle_intersection(ideal("x", "y^3"), ideal("x^3", "y")) == ideal("x^3", "x*y", "y^3")


def test_wrong_power_bound_is_caught():
    a = ideal("x^2", "y^3")
    with pytest.raises(OracleError):
        oracle_membership(P("x"), a, MPrimaryCertificate(6, 2))
    with pytest.raises(OracleError):
        TruncatedSpace.build(ideal("x^3", "y^3"), 4, 3)


def test_truncated_space_spans_high_degrees():
    space = TruncatedSpace.build(ideal("x^2", "y^3"), 8, 4)
    assert space.contains({R2.encode((2, 2)): 1})
    assert not space.contains({R2.encode((1, 2)): 1})
    with pytest.raises(OracleError):
        space.vector({R2.encode((9, 0)): 1})


def test_rref_and_nullspace():
    p = 7
    a = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    rows, pivots = linalg.rref(a, p)
    assert pivots == [0, 1] and rows.shape == (2, 3)
    ker = linalg.nullspace(a, p)
    assert ker.shape == (1, 3)
    assert not linalg.matmul(a, ker.T, p).any()
    assert linalg.nullspace(np.zeros((0, 2), dtype=np.int64), p).shape == (2, 2)


def test_object_dtype_for_huge_primes():
    p = (1 << 61) - 1
    assert linalg.dtype_for(p) is object
    a = np.array([[p - 1, 1], [1, 1]], dtype=object)
    rows, pivots = linalg.rref(a, p)
    assert pivots == [0, 1]
