from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from colonlab.ideal import Ideal, ideal_from_strings
from colonlab.polynomial import Polynomial
from colonlab.ring import RingContext

settings.register_profile("colonlab", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("colonlab")

R2 = RingContext.make("x,y")
R3 = RingContext.make("x,y,z")


@pytest.fixture
def ring():
    return R2


@pytest.fixture
def ring3():
    return R3


@pytest.fixture
def rng():
    return random.Random(1234)


def ideal(*gens: str, ring: RingContext = R2) -> Ideal:
    return ideal_from_strings(ring, list(gens))


def m(ring: RingContext = R2) -> Ideal:
    return Ideal.maximal(ring)


def polynomials(ring: RingContext = R2, max_degree: int = 4, max_terms: int = 5, min_degree: int = 0):
    """Hypothesis strategy for random polynomials of bounded degree."""
    n = ring.num_vars
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(
        lambda e: min_degree <= sum(e) <= max_degree)
    coeffs = st.integers(0, ring.p - 1)
    return st.dictionaries(exps.map(tuple), coeffs, max_size=max_terms).map(
        lambda d: Polynomial.from_exponents(ring, [(c, e) for e, c in d.items()]))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
