"""Checks specific to k[x, y] localized at the origin.

Here every nonzero ideal is I = f J with J primary to the origin (or the
unit ideal), fullness and m-fullness coincide and are read off from
mu(J) = ord(J) + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .asymptotics import DEFAULT_CAP, DEFAULT_WINDOW, ThresholdReport, n_invariant
from .errors import HypothesisNotMet
from .fullness import _unanimous, is_full, is_m_full
from .ideal import (Ideal, _divide_exact, colon, intersect, is_m_primary, mu, ord_ideal,
                    saturate)
from .polynomial import Polynomial, random_linear_form
from .ring import RingContext

# -- univariate arithmetic over Z/p, coefficient lists low -> high ---------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _usub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _umul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _udivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] = (a[s + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def _umonic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _ugcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _udivmod(a, b, p)[1]
    return _umonic(a, p)


# -- k[x][y] with y the main variable: {y-degree: coefficient list in x} -------------------


def _to_bivariate(f: Polynomial) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for k, c in f.raw.items():
        ex, ey = f.ring.decode(k)
        row = out.setdefault(ey, [])
        if len(row) <= ex:
            row.extend([0] * (ex + 1 - len(row)))
        row[ex] = c
    return {d: _trim(r) for d, r in out.items() if _trim(r)}


def _from_bivariate(ring: RingContext, f: dict[int, list[int]]) -> Polynomial:
    return Polynomial(ring, {ring.encode((ex, ey)): c for ey, row in f.items()
                             for ex, c in enumerate(row) if c})


def _content(f: dict[int, list[int]], p: int) -> list[int]:
    g: list[int] = []
    for row in f.values():
        g = _ugcd(g, row, p) if g else _umonic(list(row), p)
        if g == [1]:
            break
    return g


def _divide_content(f: dict[int, list[int]], c: list[int], p: int) -> dict[int, list[int]]:
    return {d: _udivmod(row, c, p)[0] for d, row in f.items()}


def _prem(a: dict[int, list[int]], b: dict[int, list[int]], p: int) -> dict[int, list[int]]:
    """Pseudo-remainder of a by b with respect to y."""
    a = dict(a)
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        shift = da - db
        new = {d: _umul(row, lb, p) for d, row in a.items()}
        for d, row in b.items():
            t = d + shift
            new[t] = _usub(new.get(t, []), _umul(row, la, p), p)
        a = {d: r for d, r in new.items() if r}
    return a


def _primitive_part(f: dict[int, list[int]], p: int) -> dict[int, list[int]]:
    return _divide_content(f, _content(f, p), p)


def bivariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """gcd in k[x, y] by content / primitive-part recursion, normalized monic."""
    ring = f.ring
    p = ring.p
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    a, b = _to_bivariate(f), _to_bivariate(g)
    c = _ugcd(_content(a, p), _content(b, p), p)
    a, b = _primitive_part(a, p), _primitive_part(b, p)
    if max(a) < max(b):
        a, b = b, a
    while b and max(b) > 0:
        r = _prem(a, b, p)
        a, b = b, (_primitive_part(r, p) if r else {})
    if b:  # b is a nonzero element of k[x]: the primitive gcd is 1
        prim = {0: [1]}
    else:
        prim = a
    out = {d: _umul(row, c, p) for d, row in prim.items()}
    return _from_bivariate(ring, out).monic()


# -- the factorization I = f J -------------------------------------------------------------


def _require_two_vars(ideal: Ideal):
    if ideal.ring.num_vars != 2:
        raise ValueError("this check needs a ring in exactly 2 variables")


def local_component(j: Ideal) -> Ideal:
    """The origin-primary component of a zero-dimensional ideal (R if the
    origin is not in its zero set)."""
    if j.is_unit() or is_m_primary(j):
        return j
    m = Ideal.maximal(j.ring)
    if not (j + m).is_proper():
        return Ideal.unit(j.ring)
    away = saturate(j, m)
    return saturate(j, away)


@dataclass
class FJFactorization:
    f: Polynomial
    j: Ideal
    j_local: Ideal
    certified: bool


def factor_out_gcd(i: Ideal) -> FJFactorization:
    _require_two_vars(i)
    if i.is_zero():
        raise ValueError("I must be nonzero")
    ring = i.ring
    basis = i.basis_polys()
    f = basis[0]
    for g in basis[1:]:
        f = bivariate_gcd(f, g)
    f = f.monic()
    quotients = [Polynomial(ring, _divide_exact(ring, g.raw, f.raw), _trusted=True) for g in basis]
    j = Ideal(ring, quotients, _trusted=True)
    certified = (j * f) == i
    return FJFactorization(f, j, local_component(j), certified)


@dataclass
class FullfactsReport:
    ideal: Ideal
    factorization: FJFactorization
    m_full_i: bool
    full_i: bool
    m_full_j: bool
    full_j: bool
    mu_equals_ord_plus_one: bool

    @property
    def conditions(self) -> list[bool]:
        return [self.m_full_i, self.full_i, self.m_full_j, self.full_j, self.mu_equals_ord_plus_one]

    @property
    def unanimous(self) -> bool:
        return len(set(self.conditions)) == 1


def fullfacts_check(i: Ideal, trials: int = 3, rng: random.Random | None = None) -> FullfactsReport:
    _require_two_vars(i)
    if i.is_zero() or i.is_unit():
        raise ValueError("I must be nonzero and proper")
    rng = rng or random.Random(0)
    fac = factor_out_gcd(i)
    forms = [random_linear_form(i.ring, rng) for _ in range(trials)]
    m_full_i = is_m_full(i, forms=forms)
    full_i = is_full(i, forms=forms)
    jl = fac.j_local
    if jl.is_unit():
        # principal I: conditions on J hold by convention
        m_full_j = full_j = mu_ok = True
    else:
        m_full_j = is_m_full(jl, forms=forms)
        full_j = is_full(jl, forms=forms)
        mu_ok = mu(jl) == ord_ideal(jl) + 1
    return FullfactsReport(i, fac, m_full_i, full_i, m_full_j, full_j, mu_ok)


@dataclass
class ColonAdditivity:
    colon_additive: bool
    order_condition: bool

    @property
    def equivalent(self) -> bool:
        return self.colon_additive == self.order_condition

    def __iter__(self):
        return iter((self.colon_additive, self.order_condition, self.equivalent))


def colon_additivity_check(i: Ideal, j: Ideal, trials: int = 3,
                           rng: random.Random | None = None) -> ColonAdditivity:
    """(I+J):x == I:x + J:x for general x, against ord(I∩J) == max(ord I, ord J)."""
    _require_two_vars(i)
    if i.is_zero() or j.is_zero():
        raise ValueError("I and J must be nonzero")
    rng = rng or random.Random(0)
    s = i + j
    verdicts = []
    for _ in range(trials):
        x = random_linear_form(i.ring, rng)
        verdicts.append(colon(s, x) == colon(i, x) + colon(j, x))
    additive = _unanimous(verdicts)
    order_ok = ord_ideal(intersect(i, j)) == max(ord_ideal(i), ord_ideal(j))
    return ColonAdditivity(additive, order_ok)


@dataclass
class SumFullVerdict:
    total: Ideal
    full: bool


def sum_full_check(i: Ideal, j: Ideal, trials: int = 3, rng: random.Random | None = None) -> SumFullVerdict:
    """I, J full with ord(I∩J) = max(ord I, ord J)  =>  I + J full."""
    _require_two_vars(i)
    rng = rng or random.Random(0)
    if not is_full(i, trials, rng) or not is_full(j, trials, rng):
        raise HypothesisNotMet("both ideals must be full")
    if ord_ideal(intersect(i, j)) != max(ord_ideal(i), ord_ideal(j)):
        raise HypothesisNotMet("ord(I∩J) != max(ord I, ord J)")
    total = i + j
    return SumFullVerdict(total, is_full(total, trials, rng))


@dataclass
class NEqualityReport:
    reports: dict[int, ThresholdReport]

    @property
    def values(self) -> dict[int, int | None]:
        return {w: r.threshold for w, r in self.reports.items()}

    @property
    def equal(self) -> bool:
        vals = list(self.values.values())
        return None not in vals and len(set(vals)) == 1


def n_equality_check(i: Ideal, trials: int = 3, window: int = DEFAULT_WINDOW, cap: int = DEFAULT_CAP,
                     rng: random.Random | None = None) -> NEqualityReport:
    _require_two_vars(i)
    rng = rng or random.Random(0)
    return NEqualityReport({w: n_invariant(i, w, trials, window, cap, rng) for w in (1, 2, 3)})
