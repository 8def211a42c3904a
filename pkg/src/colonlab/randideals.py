"""Seeded generators of random polynomials and m-primary ideals for the suites."""

from __future__ import annotations

import random

from .ideal import Ideal, certify_m_primary
from .polynomial import Polynomial
from .ring import RingContext


def random_monomial_exps(ring: RingContext, rng: random.Random, degree: int) -> tuple[int, ...]:
    n = ring.num_vars
    cuts = sorted(rng.randint(0, degree) for _ in range(n - 1))
    bounds = [0] + cuts + [degree]
    return tuple(bounds[i + 1] - bounds[i] for i in range(n))


def random_polynomial(ring: RingContext, rng: random.Random, min_deg: int = 1,
                      max_deg: int = 4, terms: int = 3) -> Polynomial:
    """Random polynomial whose terms have total degree in [min_deg, max_deg]."""
    p = ring.p
    acc: dict[int, int] = {}
    for _ in range(terms):
        d = rng.randint(min_deg, max_deg)
        k = ring.encode(random_monomial_exps(ring, rng, d))
        acc[k] = (acc.get(k, 0) + rng.randrange(1, p)) % p
    return Polynomial(ring, acc)


def random_m_primary(ring: RingContext, rng: random.Random, order: int | None = None,
                     spread: int = 3, extra: tuple[int, int] = (1, 3), terms: int = 3) -> Ideal:
    """Pure powers of every variable plus a few random polynomials, all in m^order.

    The pure powers pin the zero set to the origin, so the result is always
    m-primary (and certified before it is returned).
    """
    if order is None:
        order = rng.choice((1, 2, 2, 3))
    n = ring.num_vars
    gens = []
    for i in range(n):
        exps = [0] * n
        exps[i] = rng.randint(order, order + spread)
        gens.append(Polynomial.from_exponents(ring, [(1, exps)]))
    for _ in range(rng.randint(*extra)):
        f = random_polynomial(ring, rng, order, order + spread - 1, rng.randint(1, terms))
        if f:
            gens.append(f)
    ideal = Ideal(ring, gens)
    certify_m_primary(ideal)
    return ideal


def random_monomial_ideal(ring: RingContext, rng: random.Random, max_power: int = 5,
                          extra: int = 3) -> Ideal:
    gens = []
    for i in range(ring.num_vars):
        exps = [0] * ring.num_vars
        exps[i] = rng.randint(1, max_power)
        gens.append(Polynomial.from_exponents(ring, [(1, exps)]))
    for _ in range(rng.randint(0, extra)):
        d = rng.randint(1, max_power)
        gens.append(Polynomial.from_exponents(ring, [(1, random_monomial_exps(ring, rng, d))]))
    return Ideal(ring, gens)


def random_principal_factor(ring: RingContext, rng: random.Random, max_deg: int = 2) -> Polynomial:
    """A random nonzero element of m, used as the factor f in I = f*J."""
    while True:
        f = random_polynomial(ring, rng, 1, max_deg, rng.randint(1, 2))
        if f:
            return f
