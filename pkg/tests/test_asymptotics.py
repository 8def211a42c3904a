from __future__ import annotations

import random

import pytest

from colonlab.asymptotics import (ThresholdReport, coloncor_threshold, fullthm_check, general_element,
                                  lemma_threshold, n_invariant, scan_threshold)
from colonlab.fullness import is_m_full
from colonlab.ideal import Ideal, power_of_maximal
from colonlab.randideals import random_m_primary

from conftest import R2, ideal, m

ONE = Ideal.unit(R2)
ZERO = Ideal.zero(R2)


def test_scan_threshold_semantics():
    rep = scan_threshold("demo", lambda n: n >= 4 or n == 1, floor=0, window=3, cap=20)
    assert rep.threshold == 4
    assert rep.holds_on_window()
    assert [ok for _, ok in rep.trace] == [False, True, False, False, True, True, True, True]
    assert rep.heuristic
    missing = scan_threshold("demo", lambda n: n % 2 == 0, floor=0, window=2, cap=10)
    assert not missing.found
    assert missing.to_dict()["threshold"] == "not found <= 10"
    assert len(missing.trace) == 11
    with pytest.raises(ValueError):
        scan_threshold("demo", bool, floor=0, window=5, cap=3)


def test_lemma_examples():
    assert lemma_threshold(m(), ONE).threshold == 1
    assert lemma_threshold(m(), ideal("x")).threshold == 1
    golden = lemma_threshold(ideal("x^2", "y^2"), ONE)
    assert golden.threshold == 1
    assert golden.trace == [(n, True) for n in range(1, 7)]
    with pytest.raises(ValueError):
        lemma_threshold(ZERO, ONE)


def test_coloncor_examples():
    assert coloncor_threshold(m(), ideal("x^3"), ONE).threshold == 1
    assert coloncor_threshold(m(), ZERO, ONE).threshold == 1


def test_fullthm_examples():
    base, rep = fullthm_check(ideal("x^2", "y^2"), ONE, "m_full")
    assert base is False
    assert rep.threshold is not None and rep.threshold <= 3
    base, rep = fullthm_check(ZERO, ONE, "weakly_m_full")
    assert base is True and rep.threshold == 1
    with pytest.raises(ValueError):
        fullthm_check(m() ** 2, ZERO, "m_full")


@pytest.mark.parametrize("a", [2, 3])
def test_n_invariant_examples(a):
    i = ideal(f"x^{a}", f"y^{a}")
    assert all(n_invariant(i, w).threshold == a - 1 for w in (1, 2, 3))


def test_n_invariant_of_m_is_zero():
    assert n_invariant(m(), 1).threshold == 0
    with pytest.raises(ValueError):
        n_invariant(m(), 4)


def test_general_element_lies_in_ideal(rng):
    i = ideal("x^2", "x*y + y^3")
    for _ in range(5):
        g = general_element(i, rng)
        assert g in i and g


def test_monotone_consistency_and_n1_dominates():
    rng = random.Random(41)
    for _ in range(25):
        i = random_m_primary(R2, rng)
        rep = n_invariant(i, 1, cap=25, window=5, rng=rng)
        trace = [ok for _, ok in rep.trace]
        if True in trace:
            first = trace.index(True)
            assert all(trace[first:])
        n1 = rep.threshold
        assert n1 >= n_invariant(i, 2, rng=rng).threshold
        assert n1 >= n_invariant(i, 3, rng=rng).threshold


def test_monotone_consistency_full_trace():
    i = ideal("x^4", "y^4")
    flags = [is_m_full(i * power_of_maximal(R2, n), rng=random.Random(n)) for n in range(0, 26)]
    first = flags.index(True)
    assert first == 3 and all(flags[first:])


def test_coloncor_degenerates_to_lemma():
    rng = random.Random(42)
    for _ in range(100):
        i = random_m_primary(R2, rng)
        assert lemma_threshold(i, ONE, rng=rng).threshold == coloncor_threshold(i, ZERO, ONE).threshold


def test_reports_are_deterministic():
    i = ideal("x^3", "x*y^2", "y^4")
    a = n_invariant(i, 1, rng=random.Random(5)).to_dict()
    b = n_invariant(i, 1, rng=random.Random(5)).to_dict()
    assert a == b
    assert isinstance(ThresholdReport("f", 1, 5, 40, 0).to_dict()["heuristic"], bool)
